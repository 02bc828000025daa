#include "toriplan/vertex_set.hpp"

#include <sstream>

#include "toriplan/error.hpp"

namespace toriplan {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kAntipodalInput: return "AntipodalInput";
    case ErrorCode::kPoleInput: return "PoleInput";
    case ErrorCode::kPointNotInComplex: return "PointNotInComplex";
    case ErrorCode::kGradingMismatch: return "GradingMismatch";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int i : members) {
    if (i < 1 || i > kMaxGround) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "vertex " + std::to_string(i) + " outside 1..63");
    }
    bits_ |= std::uint64_t{1} << (i - 1);
  }
}

VertexSet VertexSet::from_indices(std::span<const int> members, int n) {
  VertexSet out;
  for (int i : members) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "vertex " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
    out.bits_ |= std::uint64_t{1} << (i - 1);
  }
  return out;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : members()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

int crossing_count(VertexSet left, VertexSet right) {
  int count = 0;
  for (std::uint64_t b = right.bits(); b != 0; b &= b - 1) {
    const int r = std::countr_zero(b);
    // elements of `left` strictly above r
    const std::uint64_t above = r >= 63 ? 0 : (~std::uint64_t{0} << (r + 1));
    count += std::popcount(left.bits() & above);
  }
  return count;
}

}  // namespace toriplan
