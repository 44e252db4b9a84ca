#pragma once

// Command implementations behind the toric-index CLI. Exit codes: 0 pass,
// 1 mathematical failure, 2 input error, 3 resource cap exceeded.

#include "toric/json_io.hpp"
#include "toric/oracle.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace toric::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCapExceeded = 3;

inline long long point_cap_from_env() {
  if (const char* cap = std::getenv("TORIC_INDEX_POINT_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(cap, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultPointCap;
}

inline int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    MomentCone c = jio::cone_from_file(path);
    GoodnessReport rep = is_good(c);
    out << jio::dump(jio::goodness_to_json(rep));
    return rep.good ? kExitPass : kExitMathFailure;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

inline int cmd_edges(const std::string& path, bool as_json, std::ostream& out,
                     std::ostream& err) {
  try {
    MomentCone c = jio::cone_from_file(path);
    if (!c.reeb) {
      err << "error: cone spec has no reeb vector; add \"reeb\" to compute edges\n";
      return kExitInputError;
    }
    std::vector<EdgeFrame> frames = edges(c);
    if (as_json) {
      nlohmann::json j = nlohmann::json::array();
      for (const EdgeFrame& f : frames) j.push_back(jio::edge_frame_to_json(f));
      out << jio::dump(j);
    } else {
      for (std::size_t i = 0; i < frames.size(); ++i) {
        const EdgeFrame& f = frames[i];
        out << "edge " << i << "  facets " << detail::format_indices(f.facet_indices)
            << "  mu " << detail::format_vec(f.mu) << "  v0 " << detail::format_vec(f.completion)
            << "  weights";
        for (const IntVec& w : f.weights) out << " " << detail::format_vec(w);
        out << "  mu(R) " << f.reeb_pairing << "\n";
      }
    }
    return kExitPass;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

inline int cmd_index(const std::string& path, long long box_lo, long long box_hi,
                     unsigned eps_seed, const std::string& method,
                     const std::optional<std::string>& twist_path, std::ostream& out,
                     std::ostream& err) {
  try {
    if (method != "both" && method != "localized" && method != "lattice") {
      err << "error: --method must be both, localized or lattice\n";
      return kExitInputError;
    }
    if (twist_path && method == "both") {
      err << "error: twisted indices have no lattice counterpart; use --method localized\n";
      return kExitInputError;
    }
    MomentCone c = jio::cone_from_file(path);
    LatticeWindow w = make_window(c.dim, box_lo, box_hi);
    const long long cap = point_cap_from_env();
    if (method == "lattice") {
      IndexSeries s = index_window(c, {}, w, IndexMethod::Lattice, cap);
      out << jio::dump(jio::series_to_json(s));
      return kExitPass;
    }
    if (!c.reeb) {
      err << "error: cone spec has no reeb vector; localized indices need one\n";
      return kExitInputError;
    }
    std::vector<IndexTerm> terms = localization_terms(c, find_polarizing_eps(c, eps_seed));
    if (twist_path) jio::apply_twist_file(terms, *twist_path);
    if (method == "localized") {
      IndexSeries s = index_window(c, terms, w, IndexMethod::Localized, cap);
      out << jio::dump(jio::series_to_json(s));
      return kExitPass;
    }
    IndexComparison cmp = index_window_both(c, terms, w, cap);
    out << jio::dump(jio::comparison_to_json(cmp));
    return cmp.equal ? kExitPass : kExitMathFailure;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cap_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

inline int cmd_verify(const std::string& path, long long box_lo, long long box_hi,
                      unsigned seed_count, bool corrupt_sign, bool with_timing,
                      std::ostream& out, std::ostream& err) {
  try {
    MomentCone c = jio::cone_from_file(path);
    if (!c.reeb) {
      err << "error: cone spec has no reeb vector; verification needs one\n";
      return kExitInputError;
    }
    if (seed_count == 0) {
      err << "error: --seeds must be positive\n";
      return kExitInputError;
    }
    LatticeWindow w = make_window(c.dim, box_lo, box_hi);
    std::vector<unsigned> seeds;
    for (unsigned s = 0; s < seed_count; ++s) seeds.push_back(s);
    oracle::VerificationReport rep =
        oracle::verify_index_equality(c, w, seeds, point_cap_from_env(), corrupt_sign);
    out << jio::dump(jio::report_to_json(rep, with_timing));
    return rep.pass() ? kExitPass : kExitMathFailure;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cap_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
}

// Families: orthant --dim d | delzant --polytope square|simplex | N --n --k --m
inline int cmd_example(const std::string& family, int dim, const std::string& polytope, int n,
                       long long k, long long m, std::ostream& out, std::ostream& err) {
  try {
    MomentCone c;
    if (family == "orthant") {
      c = example_orthant(dim);
    } else if (family == "delzant") {
      if (polytope == "square") {
        c = cone_over_polytope({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, 1}, {{0, -1}, 1}});
      } else if (polytope == "simplex") {
        c = cone_over_polytope({{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 1}});
      } else {
        err << "error: --polytope must be square or simplex\n";
        return kExitInputError;
      }
    } else if (family == "N") {
      c = example_N(n, Int(k), Int(m));
    } else {
      err << "error: unknown example family " << family << "\n";
      return kExitInputError;
    }
    out << jio::dump(jio::cone_to_json(c));
    return kExitPass;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace toric::cli
