#pragma once

#include <optional>
#include <string>

#include "clasperkit/braid.hpp"
#include "clasperkit/int_matrix.hpp"

namespace clasperkit {

// A closed oriented 3-manifold given by surgery on S^3: either a framed braid
// closure diagram or just a symmetric linking matrix.
class SurgeryPresentation {
 public:
  // default: the empty presentation of S^3
  SurgeryPresentation() : link_(FramedBraidLink::empty_link()) {}

  static SurgeryPresentation diagram(FramedBraidLink link, std::string label = "");
  static SurgeryPresentation matrix_only(IntMatrix b, std::string label = "");

  bool is_diagram() const { return link_.has_value(); }
  const FramedBraidLink& link() const;

  IntMatrix linking_matrix() const;
  std::size_t component_count() const;

  const std::string& label() const { return label_; }

  bool operator==(const SurgeryPresentation& o) const;

  std::string to_string() const;

 private:
  std::optional<FramedBraidLink> link_;
  std::optional<IntMatrix> matrix_;
  std::string label_;
};

}  // namespace clasperkit
