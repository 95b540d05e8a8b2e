#pragma once

#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sphkl/affine_weyl.hpp"
#include "sphkl/coeff_ring.hpp"
#include "sphkl/hecke.hpp"
#include "sphkl/poly_rep.hpp"
#include "sphkl/spherical_kl.hpp"

namespace sphkl {

/// Contents of a root-datum file.
struct DatumFile {
    int rank = 0;
    std::vector<Weight> roots;
    std::vector<Coweight> coroots;
    /// node name ("s1", "a1") -> class symbol
    std::map<std::string, std::string> labels;
};

/// Format:
///   rank N
///   root i: c1 ... cN
///   coroot i: c1 ... cN
///   label s1: v        (nodes s1..sk, affine nodes a1..am)
/// with '#' starting a comment. Errors carry "source:line:".
DatumFile parse_datum(std::istream& in, const std::string& source = "<input>");
DatumFile load_datum(const std::string& path);

/// Everything needed to compute with one root datum and one choice of parameters.
class Session {
public:
    explicit Session(const DatumFile& file,
                     std::optional<std::map<std::string, int>> specialization = std::nullopt);
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    const AffineWeyl& weyl() const { return *W_; }
    const RootDatum& datum() const { return W_->datum(); }
    const Parameters& params() const { return *params_; }
    const HeckeAlgebra& hecke() const { return *hecke_; }
    const PolyRep& rep() const { return *rep_; }
    const Spherical& spherical() const { return *sph_; }

    /// "2,0" -> (2,0); checks the dimension.
    Coweight parse_coweight(const std::string& text) const;

private:
    std::unique_ptr<AffineWeyl> W_;
    std::unique_ptr<Parameters> params_;
    std::unique_ptr<HeckeAlgebra> hecke_;
    std::unique_ptr<PolyRep> rep_;
    std::unique_ptr<Spherical> sph_;
};

/// Comma-separated integers of the given arity.
Coweight parse_coweight(const std::string& text, int rank);

/// Directory holding the bundled datum files (compiled in).
std::string data_directory();

} // namespace sphkl
