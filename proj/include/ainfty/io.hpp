#pragma once

#include <iosfwd>
#include <memory>
#include <variant>

#include "ainfty/limits.hpp"
#include "ainfty/module.hpp"

namespace ainfty {

// Line-oriented text format, UTF-8, LF endings, '#' comments:
//
//   algebra <name> kmax=<int>
//   gen <symbol> deg=<int> filt=<p/q>
//   unit <symbol>
//   op m<k>: <g1> ... <gk> -> <int>*<g> [+ <int>*<g> ...]
//
//   module <name> kmax=<int>        (over the algebra passed to the parser)
//   op n<k>: <a1> ... <ak> <m> -> ...
//   cyclic <element-expr>
//
//   bimodule <name> kmax=<int>      (over the two algebras passed in)
//   op n<k>,<l>: <c1>..<ck> <p> <a1>..<al> -> ...
//
//   complex <name>
//   gen <symbol> deg=<int>
//   op d: <g> -> ...
//
//   directed-system <name> stages=<n>
//   stage <i> / target <i>: inline complexes
//   map incl<i>|jincl<i>|f<i>|h<i>: <g> -> ...
//
// Serialization is canonical: generators in basis order, op lines sorted by
// arity then lexicographically by input tuple, elements in basis order.

struct ModuleDocument {
    AInfModule module;
    std::optional<Element> cyclic;  // over the module basis
};

struct DirectedSystemDocument {
    std::string name;
    std::shared_ptr<DirectedSystem> system;  // owns stages and maps
};

CurvedAInfAlgebra parse_algebra(const std::string& text);
ModuleDocument parse_module(const std::string& text,
                            const CurvedAInfAlgebra& algebra);
AInfBimodule parse_bimodule(const std::string& text,
                            const CurvedAInfAlgebra& left,
                            const CurvedAInfAlgebra& right);
FiniteComplex parse_complex(const std::string& text);
DirectedSystemDocument parse_directed_system(const std::string& text);

// "algebra" / "module" / "bimodule" / "complex" / "directed-system"
std::string document_kind(const std::string& text);

std::string serialize(const CurvedAInfAlgebra& a);
std::string serialize(const AInfModule& m,
                      const std::optional<Element>& cyclic = std::nullopt);
std::string serialize(const AInfBimodule& p);
std::string serialize(const FiniteComplex& c);

// Element expression: canonical "3*x - 1*c" form; a bare symbol is accepted
// as shorthand for coefficient 1 (used by CLI flags).
Element parse_element(const std::string& text, const Basis& basis);

std::string read_file(const std::string& path);

}  // namespace ainfty
