#include "egt/graph6.hpp"

#include <istream>
#include <vector>

namespace egt {

namespace {

constexpr int kOffset = 63;
constexpr int kMaxByte = 126;

int group_value(unsigned char byte, std::string_view record) {
  if (byte < kOffset || byte > kMaxByte)
    throw Graph6Error("byte out of range 63..126 in record \"" + std::string(record) + "\"");
  return byte - kOffset;
}

}  // namespace

Graph6Decoded graph6_decode(std::string_view record) {
  if (record.empty()) throw Graph6Error("empty record");
  unsigned char head = static_cast<unsigned char>(record[0]);
  if (head == 126) throw Graph6Error("long-form graph6 is not supported");
  int n = group_value(head, record);
  if (n > kMaxVertices)
    throw Graph6Error("graph6 record has n = " + std::to_string(n) +
                      ", above the vertex capacity of 32");
  int nbits = n * (n - 1) / 2;
  int ngroups = (nbits + 5) / 6;
  if (static_cast<int>(record.size()) - 1 < ngroups)
    throw Graph6Error("truncated graph6 body in record \"" + std::string(record) + "\"");
  if (static_cast<int>(record.size()) - 1 > ngroups)
    throw Graph6Error("trailing bytes after graph6 body in record \"" +
                      std::string(record) + "\"");

  Graph6Decoded out;
  std::vector<std::pair<int, int>> edges;
  int pos = 0;  // bit index over columns v = 1..n-1, rows u = 0..v-1
  int u = 0, v = 1;
  for (int gidx = 0; gidx < ngroups; ++gidx) {
    int val = group_value(static_cast<unsigned char>(record[static_cast<std::size_t>(1 + gidx)]),
                          record);
    for (int bit = 5; bit >= 0; --bit, ++pos) {
      bool set = (val >> bit) & 1;
      if (pos < nbits) {
        if (set) edges.emplace_back(u, v);
        if (++u == v) {
          u = 0;
          ++v;
        }
      } else if (set) {
        out.padding_warning = true;
      }
    }
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

std::string graph6_encode(const Graph& g) {
  int n = g.n();
  int nbits = n * (n - 1) / 2;
  int ngroups = (nbits + 5) / 6;
  std::string out;
  out.reserve(static_cast<std::size_t>(1 + ngroups));
  out.push_back(static_cast<char>(kOffset + n));
  int val = 0, filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      val = (val << 1) | static_cast<int>(g.has_edge(u, v));
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + val));
        val = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(kOffset + (val << (6 - filled))));
  return out;
}

std::optional<std::string> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    constexpr std::string_view header = ">>graph6<<";
    if (line.starts_with(header)) line.erase(0, header.size());
    if (line.empty()) continue;
    return line;
  }
  return std::nullopt;
}

}  // namespace egt
