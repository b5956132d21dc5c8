#include "jnorm/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

namespace jnorm {

SequenceKind parse_kind(const std::string& name) {
  if (name == "plateau") return SequenceKind::Plateau;
  if (name == "alternating") return SequenceKind::Alternating;
  if (name == "random_rational") return SequenceKind::RandomRational;
  if (name == "decay") return SequenceKind::Decay;
  throw std::invalid_argument("unknown sequence kind: '" + name + "'");
}

std::string kind_name(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::Plateau: return "plateau";
    case SequenceKind::Alternating: return "alternating";
    case SequenceKind::RandomRational: return "random_rational";
    case SequenceKind::Decay: return "decay";
  }
  return "?";
}

Sequence generate(const GeneratorSpec& spec) {
  std::vector<Rat> vals(spec.n);
  switch (spec.kind) {
    case SequenceKind::Plateau:
      for (auto& v : vals) v = 1;
      break;
    case SequenceKind::Alternating:
      for (std::size_t i = 0; i < spec.n; ++i) vals[i] = (i % 2 == 0) ? 1 : -1;
      break;
    case SequenceKind::Decay:
      for (std::size_t i = 0; i < spec.n; ++i) vals[i] = Rat(1, static_cast<long>(i + 1));
      break;
    case SequenceKind::RandomRational: {
      std::mt19937_64 gen(spec.seed);
      std::uniform_int_distribution<int> num(-9, 9);
      std::uniform_int_distribution<int> den(1, 9);
      for (auto& v : vals) v = Rat(num(gen), den(gen));
      break;
    }
  }
  return Sequence(std::move(vals));
}

std::vector<SweepRow> dichotomy_sweep(const EVector& e, SequenceKind kind, std::size_t n_max,
                                      std::uint64_t seed) {
  if (n_max < 1) throw std::invalid_argument("dichotomy_sweep: n_max must be >= 1");
  std::vector<SweepRow> rows;
  rows.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Sequence x = generate({kind, n, seed});
    SweepRow row;
    row.n = n;
    row.e_norm_sq = e_norm_sq(e, x);
    row.l2_sq = l2_norm_sq(x);
    row.james_sq = james_norm_sq(x);
    row.ratio_l2_over_e =
        row.e_norm_sq > 0 ? std::sqrt(to_double(row.l2_sq) / to_double(row.e_norm_sq))
                          : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string emit_csv(const std::vector<SweepRow>& rows) {
  std::string out = "n,e_norm_sq,l2_sq,james_sq,ratio_l2_over_e\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    out += ',';
    out += to_string(r.e_norm_sq);
    out += ',';
    out += to_string(r.l2_sq);
    out += ',';
    out += to_string(r.james_sq);
    out += ',';
    out += fmt_double(r.ratio_l2_over_e);
    out += '\n';
  }
  return out;
}

std::string emit_svg(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw std::invalid_argument("emit_svg: no rows");
  const double width = 640, height = 400;
  const double ml = 60, mr = 20, mt = 20, mb = 50;
  double ymax = 0;
  for (const auto& r : rows)
    if (r.ratio_l2_over_e > ymax) ymax = r.ratio_l2_over_e;
  if (ymax <= 0) ymax = 1;
  const double xmax = static_cast<double>(rows.back().n);
  auto sx = [&](double n) { return ml + (width - ml - mr) * (xmax > 1 ? (n - 1) / (xmax - 1) : 0.5); };
  auto sy = [&](double v) { return height - mb - (height - mt - mb) * (v / ymax); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
         "viewBox=\"0 0 640 400\">\n";
  svg += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
  // axes
  svg += "<line x1=\"" + fmt_double(ml) + "\" y1=\"" + fmt_double(height - mb) + "\" x2=\"" +
         fmt_double(width - mr) + "\" y2=\"" + fmt_double(height - mb) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt_double(ml) + "\" y1=\"" + fmt_double(mt) + "\" x2=\"" +
         fmt_double(ml) + "\" y2=\"" + fmt_double(height - mb) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + fmt_double((ml + width - mr) / 2) + "\" y=\"" +
         fmt_double(height - 12) + "\" text-anchor=\"middle\" font-size=\"14\">n</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt_double((mt + height - mb) / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 " +
         fmt_double((mt + height - mb) / 2) + ")\">ratio_l2_over_e</text>\n";
  svg += "<text x=\"" + fmt_double(ml - 6) + "\" y=\"" + fmt_double(mt + 4) +
         "\" text-anchor=\"end\" font-size=\"12\">" + fmt_double(ymax) + "</text>\n";
  svg += "<text x=\"" + fmt_double(ml - 6) + "\" y=\"" + fmt_double(height - mb) +
         "\" text-anchor=\"end\" font-size=\"12\">0</text>\n";
  svg += "<text x=\"" + fmt_double(width - mr) + "\" y=\"" + fmt_double(height - mb + 16) +
         "\" text-anchor=\"middle\" font-size=\"12\">" + std::to_string(rows.back().n) +
         "</text>\n";
  svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (const auto& r : rows) {
    svg += fmt_double(sx(static_cast<double>(r.n)));
    svg += ',';
    svg += fmt_double(sy(r.ratio_l2_over_e));
    svg += ' ';
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

}  // namespace jnorm
