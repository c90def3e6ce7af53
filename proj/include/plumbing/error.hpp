#pragma once

#include <stdexcept>
#include <string>

namespace plumbing {

enum class Errc {
    SyntaxError,
    SelfLoop,
    Disconnected,
    NonPositiveArea,
    DuplicateVertex,
    UnknownVertex,
    UnknownEdge,
    DimensionMismatch,
    NotATree,
    NonzeroGenus,
    WeightOutOfRange,
    NotBlowDownable,
    NegativeDefinite,
    NoPositiveImage,
    NotExactOnBoundary,
    InfinitePi1,
    NotN3,
    NotInFamily,
    NoConjugateDefined,
    DegenerateIntersectionForm,
    InvalidParameter,
    TableError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::Disconnected: return "Disconnected";
        case Errc::NonPositiveArea: return "NonPositiveArea";
        case Errc::DuplicateVertex: return "DuplicateVertex";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::UnknownEdge: return "UnknownEdge";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotATree: return "NotATree";
        case Errc::NonzeroGenus: return "NonzeroGenus";
        case Errc::WeightOutOfRange: return "WeightOutOfRange";
        case Errc::NotBlowDownable: return "NotBlowDownable";
        case Errc::NegativeDefinite: return "NegativeDefinite";
        case Errc::NoPositiveImage: return "NoPositiveImage";
        case Errc::NotExactOnBoundary: return "NotExactOnBoundary";
        case Errc::InfinitePi1: return "InfinitePi1";
        case Errc::NotN3: return "NotN3";
        case Errc::NotInFamily: return "NotInFamily";
        case Errc::NoConjugateDefined: return "NoConjugateDefined";
        case Errc::DegenerateIntersectionForm: return "DegenerateIntersectionForm";
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::TableError: return "TableError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace plumbing
