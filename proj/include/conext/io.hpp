#pragma once

// Line-oriented text formats for cones, polytopes and tensors.
//
//   cone <name>            polytope <name>         tensor <name>
//   dim <n>                dim <d>                 shape <d_1> ... <d_r>
//   ray <p/q> ...          vertex <p/q> ...        row <p/q> ...
//   phi <p/q> ...   (optional)
//
// Blank lines and lines starting with '#' are ignored. Tensor rows run over
// the last slot; rows appear in row-major order of the remaining slots.

#include "conext/cone.hpp"
#include "conext/rational.hpp"
#include "conext/tensor.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace conext::io {

class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ConeFile {
    std::string name;
    std::size_t dim = 0;
    std::vector<RationalVector> generators;
    std::optional<RationalVector> phi;
};

struct PolytopeFile {
    std::string name;
    std::size_t dim = 0;
    std::vector<RationalVector> vertices;
};

struct TensorFile {
    std::string name;
    std::vector<std::size_t> shape;
    RationalVector entries;

    Tensor tensor() const;
};

using GeometryFile = std::variant<ConeFile, PolytopeFile>;

ConeFile parse_cone(std::istream& in);
PolytopeFile parse_polytope(std::istream& in);
TensorFile parse_tensor(std::istream& in);
/// Dispatches on the first keyword.
GeometryFile parse_geometry(std::istream& in);

/// Opens the file; a missing file is a FormatError on line 0.
ConeFile read_cone(const std::string& path);
PolytopeFile read_polytope(const std::string& path);
TensorFile read_tensor(const std::string& path);
GeometryFile read_geometry(const std::string& path);

std::string serialize(const ConeFile& f);
std::string serialize(const PolytopeFile& f);
std::string serialize(const TensorFile& f);

/// Extreme rays of the cone in canonical order, keeping name and phi.
ConeFile canonicalize(const ConeFile& f);

ConeFile to_file(const Cone& c, const std::string& name, std::optional<RationalVector> phi = std::nullopt);
TensorFile to_file(const Tensor& t, const std::string& name);

/// Inline vector such as "1,1/5,0" or "1 1/5 0".
RationalVector parse_vector(const std::string& text);

}  // namespace conext::io
