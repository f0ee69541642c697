#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "egt/graph.hpp"

namespace egt {

/// Malformed record, unsupported form, or capacity overflow.
class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Graph6Decoded {
  Graph graph;
  bool padding_warning = false;  // nonzero padding bits tolerated on input
};

/// Short-form graph6: header byte 63+n, then the upper-triangle bits
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed into 6-bit groups (high bit
/// first), each group offset by 63.  Long form (header '~') is rejected.
/// Decoding is label-preserving: vertex i of the record is vertex i of the
/// Graph.
Graph6Decoded graph6_decode(std::string_view record);

/// Inverse of graph6_decode for the graph's current labeling; padding bits
/// are always emitted as zero.
std::string graph6_encode(const Graph& g);

/// Line-delimited graph6 stream reader.  Skips blank lines, strips an
/// optional ">>graph6<<" header, and tracks line numbers for error
/// reporting.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in) : in_(in) {}

  /// Next raw record, or nullopt at end of stream.
  std::optional<std::string> next();
  long line_number() const { return line_; }

 private:
  std::istream& in_;
  long line_ = 0;
};

}  // namespace egt
