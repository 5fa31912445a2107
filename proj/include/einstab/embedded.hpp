#pragma once

namespace einstab::embedded {

const char* killing_registry();
const char* spec_grammar();

}  // namespace einstab::embedded
