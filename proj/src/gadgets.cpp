#include "qcsp/gadgets.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qcsp::gadgets {

const GadgetTable& GadgetTable::defaults() {
  static const GadgetTable g{};
  return g;
}

namespace {

int floor_log2(int x) {
  if (x < 1) throw std::invalid_argument("floor_log2: x must be >= 1");
  return std::bit_width(static_cast<unsigned>(x)) - 1;
}

int ceil_log2(int x) {
  if (x < 1) throw std::invalid_argument("ceil_log2: x must be >= 1");
  return std::bit_width(static_cast<unsigned>(x - 1));
}

double parse_double(const std::string& v, const std::string& key) {
  std::size_t pos = 0;
  double d = std::stod(v, &pos);
  if (pos != v.size()) {
    throw std::runtime_error("gadget config: bad value for " + key);
  }
  return d;
}

}  // namespace

GadgetTable load_gadget_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("gadget config: cannot open " + path);
  GadgetTable g;
  bool saw_version = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key=value");
    }
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto ke = key.find_last_not_of(" \t");
    key = key.substr(0, ke + 1);
    auto vb = val.find_first_not_of(" \t");
    val = vb == std::string::npos ? "" : val.substr(vb);

    if (key == "version") {
      g.version = static_cast<int>(parse_double(val, key));
      if (g.version != 1) {
        throw std::runtime_error("gadget config: unsupported version " + val);
      }
      saw_version = true;
    } else if (key == "adder.depth.offset") {
      g.adder_depth_offset = parse_double(val, key);
    } else if (key == "adder.count.slope") {
      g.adder_count_slope = parse_double(val, key);
    } else if (key == "adder.count.offset") {
      g.adder_count_offset = parse_double(val, key);
    } else if (key == "comparator.count.slope") {
      g.comparator_count_slope = parse_double(val, key);
    } else if (key == "comparator.count.offset") {
      g.comparator_count_offset = parse_double(val, key);
    } else if (key == "increment.toffoli") {
      g.increment_toffoli = static_cast<int>(parse_double(val, key));
    } else if (key == "increment.depth") {
      g.increment_depth = static_cast<int>(parse_double(val, key));
    } else if (key == "synthesis.slope") {
      g.synthesis_slope = parse_double(val, key);
    } else if (key == "synthesis.offset") {
      g.synthesis_offset = parse_double(val, key);
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key " + key);
    }
  }
  if (!saw_version) {
    throw std::runtime_error("gadget config: missing version key");
  }
  return g;
}

Resources mct_cost(int controls, MctKind kind, bool with_uncompute,
                   int extra_controls) {
  if (controls < 0 || extra_controls < 0) {
    throw std::invalid_argument("mct_cost: negative control count");
  }
  int c = controls + extra_controls;
  if (c <= 1) return Resources{};  // NOT / CNOT: Clifford
  std::uint64_t depth = 2 * static_cast<std::uint64_t>(ceil_log2(c)) - 1;
  std::uint64_t count = kind == MctKind::kMeasured
                            ? static_cast<std::uint64_t>(c) - 1
                            : 2 * static_cast<std::uint64_t>(c) - 3;
  std::uint64_t mult = with_uncompute ? 2 : 1;
  return Resources{Count{depth * mult}, Count{count * mult}, Count{},
                   Count{static_cast<std::uint64_t>(c > 2 ? c - 2 : 0)}};
}

Resources fanout_cost(int bits, bool controlled) {
  if (bits < 0) throw std::invalid_argument("fanout_cost: negative width");
  if (!controlled || bits == 0) return Resources{};
  return Resources{Count{1}, Count{static_cast<std::uint64_t>(bits)}, Count{},
                   Count{}};
}

Resources adder_cost(int bits, const GadgetTable& g) {
  if (bits < 1) throw std::invalid_argument("adder_cost: width must be >= 1");
  if (bits == 1) return Resources{Count{1}, Count{1}, Count{}, Count{}};
  int d = floor_log2(bits) + (bits >= 3 ? floor_log2(bits / 3 == 0 ? 1 : bits / 3) : 0) +
          static_cast<int>(g.adder_depth_offset);
  double c = g.adder_count_slope * bits + g.adder_count_offset;
  return Resources{Count{static_cast<std::uint64_t>(d)},
                   Count::from_double(c), Count{},
                   Count{static_cast<std::uint64_t>(bits)}};
}

Resources comparator_cost(int bits, const GadgetTable& g) {
  if (bits < 1) {
    throw std::invalid_argument("comparator_cost: width must be >= 1");
  }
  if (bits == 1) return Resources{Count{1}, Count{1}, Count{}, Count{}};
  Resources a = adder_cost(bits, g);
  double c = g.comparator_count_slope * bits + g.comparator_count_offset;
  return Resources{a.t_depth, Count::from_double(c), Count{}, a.ancillas};
}

Resources cswap_cost(int bits, bool extra_control) {
  if (bits < 0) throw std::invalid_argument("cswap_cost: negative width");
  if (bits == 0) return Resources{};
  std::uint64_t per_bit = extra_control ? 3 : 1;
  return Resources{Count{3}, Count{per_bit * static_cast<std::uint64_t>(bits)},
                   Count{}, Count{}};
}

Resources compare_swap_cost(int key_bits, int payload_bits,
                            const GadgetTable& g) {
  Resources cmp = comparator_cost(key_bits, g);
  Resources swap = cswap_cost(key_bits + payload_bits, /*extra_control=*/false);
  return seq_all({cmp, swap, cmp});
}

Resources increment_cost(const GadgetTable& g) {
  return Resources{Count{static_cast<std::uint64_t>(g.increment_depth)},
                   Count{static_cast<std::uint64_t>(g.increment_toffoli)},
                   Count{}, Count{}};
}

Resources rotation_cost(double eps, bool controlled, const GadgetTable& g) {
  if (!(eps > 0.0) || eps >= 1.0) {
    throw std::invalid_argument("rotation_cost: eps must be in (0, 1)");
  }
  double base = std::ceil(g.synthesis_slope * std::log2(1.0 / eps) +
                          g.synthesis_offset);
  Count t = Count::from_double(base);
  if (!controlled) return Resources{t, Count{}, t, Count{}};
  return Resources{t + Count{2}, Count{}, t + Count{8}, Count{1}};
}

Resources controlled_h_cost() {
  return Resources{Count{2}, Count{}, Count{2}, Count{}};
}

Resources controlled_hpp_cost(double eps, const GadgetTable& g) {
  Resources rot = rotation_cost(eps, /*controlled=*/true, g);
  Resources ct{Count{2}, Count{}, Count{8}, Count{}};
  Resources ch = controlled_h_cost();
  return seq_all({rot, ct, ch, ch});
}

}  // namespace qcsp::gadgets
