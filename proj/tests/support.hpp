#pragma once

#include <map>
#include <memory>
#include <string>

#include "sphkl/session.hpp"

namespace testing {

/// Sessions for the bundled data, built once per (name, specialization).
inline const sphkl::Session& session(const std::string& name, const std::string& spec = "")
{
    static std::map<std::pair<std::string, std::string>, std::unique_ptr<sphkl::Session>> cache;
    auto& slot = cache[{name, spec}];
    if (!slot) {
        std::optional<std::map<std::string, int>> s;
        if (!spec.empty())
            s = sphkl::parse_specialization(spec);
        slot = std::make_unique<sphkl::Session>(sphkl::load_datum(name), s);
    }
    return *slot;
}

inline sphkl::AffineElement el(const sphkl::Session& s, const std::string& text) { return s.weyl().parse(text); }

inline sphkl::LaurentPoly L(const sphkl::Session& s, const std::string& text) { return s.params().parse(text); }

inline sphkl::HeckeElement H(const sphkl::Session& s, const std::string& w, const std::string& c = "1")
{
    return sphkl::HeckeElement::basis(el(s, w), L(s, c));
}

inline sphkl::ExpPoly e(const sphkl::Coweight& tau, const sphkl::LaurentPoly& c = 1) { return sphkl::monomial(tau, c); }

} // namespace testing
