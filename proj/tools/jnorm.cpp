#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>

#include "jnorm/bounds.hpp"
#include "jnorm/core.hpp"
#include "jnorm/dispersal.hpp"
#include "jnorm/experiments.hpp"

namespace {

using jnorm::EVector;
using jnorm::Rat;
using jnorm::Sequence;

std::vector<Rat> parse_rational_array(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<Rat> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_string())
      out.push_back(jnorm::parse_rational(item.get<std::string>()));
    else if (item.is_number_integer())
      out.push_back(Rat(item.get<long long>()));
    else
      throw std::invalid_argument("rational entries must be strings like \"p/q\"");
  }
  return out;
}

std::vector<std::uint64_t> parse_index_array(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of indices");
  std::vector<std::uint64_t> out;
  for (const auto& item : j) {
    if (item.is_number_unsigned() || (item.is_number_integer() && item.get<long long>() > 0))
      out.push_back(item.get<std::uint64_t>());
    else if (item.is_string())
      out.push_back(std::stoull(item.get<std::string>()));
    else
      throw std::invalid_argument("indices must be positive integers");
  }
  return out;
}

int run_selftest() {
  std::cout << "selftest: oracle equivalence (exhaustive, reduced scale)\n";
  const std::vector<EVector> evs = {
      EVector({Rat(1)}), EVector({Rat(1), Rat(-1)}), EVector({Rat(1), Rat(1)}),
      EVector({Rat(2), Rat(-1), Rat(-1)})};
  for (const auto& e : evs) {
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c) {
          Sequence x({Rat(a), Rat(b), Rat(c)});
          if (jnorm::e_norm_sq(e, x) != jnorm::e_norm_sq_bruteforce(e, x, 62)) {
            std::cout << "selftest: FAIL oracle equivalence\n";
            return 3;
          }
        }
  }
  std::cout << "selftest: dispersal decomposition (500 random 2-sets)\n";
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> kd(1, 12), dd(1, 8), gap(1, 6);
    std::vector<std::uint64_t> flat;
    std::uint64_t cur = 0;
    int k = kd(gen);
    for (int i = 0; i < 2 * k; ++i) flat.push_back(cur += static_cast<std::uint64_t>(gap(gen)));
    auto omega = jnorm::TwoSet::from_flat(flat);
    auto d = static_cast<std::size_t>(dd(gen));
    if (!jnorm::validate_decomposition(omega, jnorm::decompose_dispersed(omega, d))) {
      std::cout << "selftest: FAIL dispersal decomposition\n";
      return 3;
    }
  }
  std::cout << "selftest: determinant identity (100 random e)\n";
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> dim(1, 5), num(-6, 6), den(1, 6);
    std::vector<Rat> coords(static_cast<std::size_t>(dim(gen)));
    for (auto& v : coords) v = Rat(num(gen), den(gen));
    if (coords[0] == 0) coords[0] = 1;
    EVector e(std::move(coords));
    if (jnorm::det_oracle(jnorm::insertion_matrix(e)) != jnorm::det_closed_form(e)) {
      std::cout << "selftest: FAIL determinant identity\n";
      return 3;
    }
  }
  std::cout << "selftest: regime certificates (classify, reduced samples)\n";
  try {
    jnorm::classify(EVector({Rat(1), Rat(2), Rat(3)}), 50, 11);
    jnorm::classify(EVector({Rat(2), Rat(-1), Rat(-1)}), 50, 12);
  } catch (const jnorm::math_check_error& err) {
    std::cout << "selftest: FAIL " << err.what() << "\n";
    return 3;
  }
  std::cout << "selftest: all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for the J(e) sequence-space family"};
  app.require_subcommand(1);

  std::string e_text, x_text, omega_text, kind_text = "plateau", csv_path, svg_path;
  std::size_t d_arg = 0, samples = 1000, nmax = 0;
  std::uint64_t seed = 1;
  int lemma = 0;

  auto* cmd_norm = app.add_subcommand("norm", "Squared e-variation, l2 and James norms of x");
  cmd_norm->add_option("--e", e_text, "defining vector as JSON array of rationals")->required();
  cmd_norm->add_option("--x", x_text, "sequence as JSON array of rationals")->required();

  auto* cmd_classify = app.add_subcommand("classify", "Hilbert/James dichotomy verdict for e");
  cmd_classify->add_option("--e", e_text)->required();
  cmd_classify->add_option("--samples", samples, "sampled verification count");
  cmd_classify->add_option("--seed", seed);

  auto* cmd_dec = app.add_subcommand("decompose", "d-dispersed decomposition of a 2-set");
  cmd_dec->add_option("--omega", omega_text, "flat even-length JSON index array")->required();
  cmd_dec->add_option("--d", d_arg, "dispersal parameter")->required();

  auto* cmd_const = app.add_subcommand("constant", "Embedding constant of one lemma");
  cmd_const->add_option("--lemma", lemma)->required()->check(CLI::IsMember({7, 9, 10, 11, 12, 13}));
  cmd_const->add_option("--e", e_text);
  cmd_const->add_option("--d", d_arg);

  auto* cmd_bounds = app.add_subcommand("bounds", "Regime-appropriate lemma checks on random sequences");
  cmd_bounds->add_option("--e", e_text)->required();
  cmd_bounds->add_option("--samples", samples);
  cmd_bounds->add_option("--seed", seed);

  auto* cmd_sweep = app.add_subcommand("sweep", "Equivalence-ratio sweep over truncations");
  cmd_sweep->add_option("--e", e_text)->required();
  cmd_sweep->add_option("--kind", kind_text, "plateau|alternating|random_rational|decay");
  cmd_sweep->add_option("--nmax", nmax)->required();
  cmd_sweep->add_option("--csv", csv_path)->required();
  cmd_sweep->add_option("--svg", svg_path);
  cmd_sweep->add_option("--seed", seed);

  auto* cmd_selftest = app.add_subcommand("selftest", "Reduced-scale oracle and invariant suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_norm) {
      EVector e(parse_rational_array(e_text));
      Sequence x(parse_rational_array(x_text));
      nlohmann::json out{{"e_norm_sq", jnorm::to_string(jnorm::e_norm_sq(e, x))},
                         {"l2_sq", jnorm::to_string(jnorm::l2_norm_sq(x))},
                         {"james_sq", jnorm::to_string(jnorm::james_norm_sq(x))}};
      std::cout << out.dump() << "\n";
    } else if (*cmd_classify) {
      EVector e(parse_rational_array(e_text));
      std::cout << jnorm::classification_json(jnorm::classify(e, samples, seed)) << "\n";
    } else if (*cmd_dec) {
      auto omega = jnorm::TwoSet::from_flat(parse_index_array(omega_text));
      if (d_arg < 1) throw std::invalid_argument("--d must be >= 1");
      auto dec = jnorm::decompose_dispersed(omega, d_arg);
      if (!jnorm::validate_decomposition(omega, dec))
        throw jnorm::math_check_error("decomposition failed validation");
      nlohmann::json classes = nlohmann::json::array();
      for (const auto& cls : dec.classes) classes.push_back(cls.flat());
      nlohmann::json out{{"classes", classes},
                         {"dispersal", dec.dispersal},
                         {"class_count", dec.classes.size()},
                         {"valid", true}};
      std::cout << out.dump() << "\n";
    } else if (*cmd_const) {
      if (lemma == 13) {
        std::size_t d = d_arg;
        if (d == 0 && !e_text.empty()) d = EVector(parse_rational_array(e_text)).d();
        if (d == 0) throw std::invalid_argument("lemma 13 needs --d (or --e to take d from)");
        std::cout << jnorm::to_string(Rat(d / 2 + 2)) << "\n";
      } else {
        if (e_text.empty()) throw std::invalid_argument("--e is required for this lemma");
        EVector e(parse_rational_array(e_text));
        Rat value;
        switch (lemma) {
          case 7: value = jnorm::lemma7_constant_sq(e); break;
          case 9: value = jnorm::lemma9_constant(e); break;
          case 10: value = jnorm::lemma10_lower_bound_sq(e); break;
          case 11: value = jnorm::lemma11_constant_sq(e); break;
          case 12: value = Rat(4) / (e.coords()[0] * e.coords()[0]); break;
          default: throw std::invalid_argument("unsupported lemma");
        }
        std::cout << jnorm::to_string(value) << "\n";
      }
    } else if (*cmd_bounds) {
      EVector e(parse_rational_array(e_text));
      const bool hilbert = e.sum() != 0;
      std::mt19937_64 gen(seed);
      std::size_t pass7 = 0, pass10 = 0, pass11 = 0, pass12 = 0, pass13 = 0;
      for (std::size_t i = 0; i < samples; ++i) {
        Sequence x = jnorm::random_sequence(gen(), 6);
        if (hilbert) {
          pass7 += jnorm::check_lemma7(e, x);
          pass10 += jnorm::check_lemma10(e, x);
        } else {
          pass11 += jnorm::check_lemma11(e, x);
          pass12 += jnorm::check_lemma12(e, x);
          pass13 += jnorm::check_lemma13(e.d(), x);
        }
      }
      nlohmann::json checks;
      bool all_pass;
      if (hilbert) {
        checks = {{"lemma7", pass7}, {"lemma10", pass10}};
        all_pass = pass7 == samples && pass10 == samples;
      } else {
        checks = {{"lemma11", pass11}, {"lemma12", pass12}, {"lemma13", pass13}};
        all_pass = pass11 == samples && pass12 == samples && pass13 == samples;
      }
      nlohmann::json out{{"regime", hilbert ? "Hilbert" : "James"},
                         {"samples", samples},
                         {"checks", checks}};
      std::cout << out.dump() << "\n";
      if (!all_pass) return 3;
    } else if (*cmd_sweep) {
      EVector e(parse_rational_array(e_text));
      auto kind = jnorm::parse_kind(kind_text);
      auto rows = jnorm::dichotomy_sweep(e, kind, nmax, seed);
      std::ofstream csv(csv_path, std::ios::binary);
      if (!csv) throw std::invalid_argument("cannot open CSV path: " + csv_path);
      csv << jnorm::emit_csv(rows);
      if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw std::invalid_argument("cannot open SVG path: " + svg_path);
        svg << jnorm::emit_svg(rows);
      }
    } else if (*cmd_selftest) {
      return run_selftest();
    }
  } catch (const jnorm::math_check_error& err) {
    std::cerr << "math check failed: " << err.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
