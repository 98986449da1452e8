// Command-line front end. Exit codes: 0 holds/found, 1 fails/not found,
// 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypergrowth/constructions.hpp"
#include "hypergrowth/ideals.hpp"
#include "hypergrowth/structure.hpp"
#include "hypergrowth/verify.hpp"

using namespace hypergrowth;

namespace {

Coloring load(const std::string& path) {
  if (path == "-") return read_coloring(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_coloring(in);
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::logic_error&) {
      throw ParseError("bad integer '" + tok + "'");
    }
  }
  return out;
}

std::string interval_list(const std::vector<Interval>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += '|';
    s += '[' + std::to_string(xs[i].lo) + ',' + std::to_string(xs[i].hi) + ']';
  }
  return s;
}

void emit(std::ostream& out, const Coloring& c, const std::string& output) {
  if (output.empty() || output == "-") {
    write_coloring(out, c);
    return;
  }
  std::ofstream f(output);
  if (!f) throw ParseError("cannot write '" + output + "'");
  write_coloring(f, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth functions and structure of ordered hypergraph colorings"};
  app.require_subcommand(1);

  // make
  auto* make = app.add_subcommand("make", "build a coloring or embedding");
  make->require_subcommand(1);
  std::string output;
  make->add_option("-o,--output", output, "write the coloring here instead of stdout");

  int rk = 3, rr = 3, rf = 0, rg = 3, rh = 0, ra = 0, rb = 1, filler = 0;
  auto* mk_rich = make->add_subcommand("rich", "r-rich coloring of type T_{f,g,h}");
  mk_rich->set_help_flag("--help", "print this help");
  mk_rich->add_option("--k", rk);
  mk_rich->add_option("--r", rr)->required();
  mk_rich->add_option("--f", rf);
  mk_rich->add_option("--g", rg);
  mk_rich->add_option("--h", rh);
  mk_rich->add_option("--a", ra);
  mk_rich->add_option("--b", rb);
  mk_rich->add_option("--filler", filler);

  std::string family, variant;
  int wr = 1;
  auto* mk_wealthy = make->add_subcommand("wealthy", "wealthy coloring of a family");
  mk_wealthy->add_option("--family", family)->required();
  mk_wealthy->add_option("--r", wr)->required();
  mk_wealthy->add_option("--variant", variant, "e.g. swap:0,grev:1 or swap:0,rev:01,perm:213");
  mk_wealthy->add_option("--filler", filler);

  std::string word, mode = "identity";
  auto* mk_string = make->add_subcommand("string", "embed a string's matrix into I_2n or U_3n");
  mk_string->add_option("--w", word)->required();
  mk_string->add_option("--mode", mode)->check(CLI::IsMember({"identity", "upper"}));

  std::string points;
  int cm = 0;
  auto* mk_chain = make->add_subcommand("chain", "embed an n-chain into an identity matrix");
  mk_chain->add_option("--n", cm)->required();
  mk_chain->add_option("--points", points, "row:col pairs, e.g. 1:2,3:4")->required();

  int st = 1, sr = 0;
  auto* mk_sc = make->add_subcommand("string-coloring", "string-driven coloring K_w");
  mk_sc->add_option("--w", word)->required();
  mk_sc->add_option("--t", st);
  mk_sc->add_option("--r", sr, "host parameter (default |w|+2)");
  mk_sc->add_option("--filler", filler);

  int dn = 0;
  std::string da, db;
  bool want_host = false;
  auto* mk_dis = make->add_subcommand("disobedient", "(A,B)-disobedient coloring");
  mk_dis->add_option("--n", dn)->required();
  mk_dis->add_option("--A", da)->required();
  mk_dis->add_option("--B", db)->required();
  mk_dis->add_flag("--host", want_host, "print the host instead of the member");
  mk_dis->add_option("--filler", filler);

  // classify
  auto* classify = app.add_subcommand("classify", "test a structural property");
  std::string file, prop;
  int param = 0;
  classify->add_option("file", file)->required();
  classify->add_option("--as", prop)->required()->check(
      CLI::IsMember({"rich", "simple", "tame", "wealthy", "nuclear", "homogeneous"}));
  classify->add_option("--r,--p,--c", param, "r for rich/wealthy, p for tame, c for simple");
  classify->add_option("--family", family);

  // contains
  auto* cont = app.add_subcommand("contains", "induced ordered containment");
  std::string small_file, big_file;
  cont->add_option("small", small_file)->required();
  cont->add_option("big", big_file)->required();

  // growth
  auto* grow = app.add_subcommand("growth", "growth function of an ideal");
  std::string spec_arg, cache, verdict;
  int n_max = 1, jobs = 1;
  std::uint64_t budget = 100'000'000;
  grow->add_option("--spec", spec_arg)->required();
  grow->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  grow->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  grow->add_option("--budget", budget);
  grow->add_option("--cache", cache)->envname("HYPERGROWTH_CACHE");
  grow->add_option("--verdict", verdict)->check(CLI::IsMember({"constant", "quasi"}));

  // sequence
  auto* seq = app.add_subcommand("sequence", "F, G or Gk values");
  std::string name;
  int sn = 0, sk = 0;
  seq->add_option("--name", name)->required()->check(CLI::IsMember({"F", "G", "Gk"}));
  seq->add_option("--n", sn)->required();
  seq->add_option("--k", sk);

  // verify
  auto* ver = app.add_subcommand("verify", "run acceptance criteria");
  std::string suite = "all";
  std::uint64_t seed = 0;
  ver->add_option("--suite", suite);
  ver->add_option("--seed", seed);
  ver->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  ver->add_option("--budget", budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*make) {
      if (*mk_rich) {
        emit(std::cout, make_rich(rk, rr, rf, rg, rh, static_cast<Color>(ra), static_cast<Color>(rb), static_cast<Color>(filler)),
             output);
      } else if (*mk_wealthy) {
        const auto f = parse_family(family);
        emit(std::cout, make_wealthy(f, wr, parse_variant(f, variant), static_cast<Color>(filler)), output);
      } else if (*mk_string) {
        const auto m = mode == "upper" ? StringMode::Upper : StringMode::Identity;
        const auto e = embed_string(word, m);
        std::cout << "host=" << (m == StringMode::Upper ? "U" : "I") << e.host_size << " rows=" << format_indices(e.rows)
                  << " cols=" << format_indices(e.cols) << '\n';
        write_matrix(std::cout, e.matrix);
      } else if (*mk_chain) {
        Chain c{cm, {}};
        const auto flat = [&] {
          std::string s = points;
          for (auto& ch : s)
            if (ch == ':') ch = ',';
          return int_list(s);
        }();
        if (flat.size() % 2) throw ParseError("--points needs row:col pairs");
        for (std::size_t i = 0; i < flat.size(); i += 2) c.points.push_back({flat[i], flat[i + 1]});
        const auto e = embed_chain(c);
        std::cout << "host=I" << e.size << " rows=" << format_indices(e.rows) << " cols=" << format_indices(e.cols) << '\n';
        std::cout << "bar_host=I" << e.bar_size << " bar_rows=" << format_indices(e.bar_rows)
                  << " bar_cols=" << format_indices(e.bar_cols) << '\n';
        write_matrix(std::cout, chain_matrix(c));
      } else if (*mk_sc) {
        const auto s = make_string_coloring(word, static_cast<Color>(st), sr ? sr : static_cast<int>(word.size()) + 2,
                                            static_cast<Color>(filler));
        std::cout << "# C=" << format_indices(s.C) << " D=" << format_indices(s.D) << " S=" << to_string(s.S) << '\n';
        emit(std::cout, s.member, output);
      } else if (*mk_dis) {
        const auto d = make_disobedient(dn, int_list(da), int_list(db), 0, static_cast<Color>(filler));
        std::cout << "# m=" << d.spec.m << " eps=" << d.spec.eps << " r=" << d.spec.r << " S=" << to_string(d.spec.S)
                  << '\n';
        emit(std::cout, want_host ? d.host : d.member, output);
      }
      return 0;
    }

    if (*classify) {
      const Coloring c = load(file);
      if (prop == "nuclear") {
        const auto nu = nuclear_decomposition(c);
        std::cout << "nu=" << nu.length() << " intervals=" << interval_list(nu.intervals) << '\n';
        return 0;
      }
      if (prop == "homogeneous") {
        std::vector<Vertex> all(static_cast<std::size_t>(c.n()));
        for (int i = 0; i < c.n(); ++i) all[static_cast<std::size_t>(i)] = i + 1;
        const auto h = homogeneity(c, all);
        if (h.kind == Homogeneity::Kind::NotHomogeneous) {
          std::cout << "homogeneous=false first=" << to_string(h.first) << " second=" << to_string(h.second) << '\n';
          return 1;
        }
        std::cout << "homogeneous=true";
        if (h.kind == Homogeneity::Kind::Homogeneous) std::cout << " color=" << int(h.color);
        std::cout << '\n';
        return 0;
      }
      if (prop == "rich") {
        const auto w = is_r_rich(c, param);
        if (!w) {
          std::cout << "rich=false r=" << param << '\n';
          return 1;
        }
        std::cout << "rich=true r=" << w->r << " f=" << w->f << " g=" << w->g << " h=" << w->h << " a=" << int(w->a)
                  << " b=" << int(w->b) << '\n';
        return 0;
      }
      if (prop == "simple") {
        const auto v = is_c_simple(c, param);
        if (!v) {
          std::cout << "simple=true c=" << param << '\n';
          return 0;
        }
        std::cout << "simple=false c=" << param << " condition=" << v->condition << " first=" << to_string(v->first)
                  << " second=" << to_string(v->second) << '\n';
        return 1;
      }
      if (prop == "tame") {
        const auto rep = is_p_tame(c, param);
        if (rep.tame()) {
          std::cout << "tame=true p=" << param << '\n';
          return 0;
        }
        const auto& w = *rep.witness;
        std::cout << "tame=false p=" << param << " condition=" << w.condition << " metric=" << w.metric
                  << " value=" << w.value << " tuple=" << format_indices(w.tuple) << '\n';
        return 1;
      }
      // wealthy
      if (family.empty()) throw ParseError("--as wealthy needs --family");
      const auto f = parse_family(family);
      int r = param;
      if (r == 0)
        for (int t = 1; wealthy_size(f, t) <= c.n(); ++t)
          if (wealthy_size(f, t) == c.n()) r = t;
      if (r == 0) throw SizeMismatch("no r gives a " + to_string(f) + " coloring on " + std::to_string(c.n()) + " vertices");
      const auto w = is_wealthy(c, f, r);
      if (!w) {
        std::cout << "wealthy=false family=" << to_string(f) << " r=" << r << '\n';
        return 1;
      }
      std::cout << "wealthy=true " << to_string(*w).substr(std::string("wealthy ").size()) << '\n';
      return 0;
    }

    if (*cont) {
      const auto inj = contains(load(small_file), load(big_file));
      if (!inj) {
        std::cout << "contained=false\n";
        return 1;
      }
      std::cout << "contained=true injection=" << to_string(inj->images) << '\n';
      return 0;
    }

    if (*grow) {
      const auto spec = parse_spec_argument(spec_arg);
      const auto rec = growth_cached(spec, {n_max, budget, jobs}, cache);
      for (const auto& [n, e] : rec.counts)
        std::cout << "n=" << n << " count=" << (e.count ? e.count->str() : std::string("?")) << '\n';
      if (!verdict.empty()) {
        const auto v = dichotomy_verdict(rec, verdict == "constant" ? Theorem::Constant : Theorem::QuasiFibonacci, spec.k);
        std::cout << "verdict=" << v.classification;
        if (v.poly_degree) std::cout << " poly_degree=" << *v.poly_degree;
        if (v.first_failure) std::cout << " first_failure=" << *v.first_failure;
        std::cout << " window=" << rec.last_exact() << '\n';
      }
      return rec.complete() ? 0 : 1;
    }

    if (*seq) {
      const BigInt v = sequence(name, sn, sk);
      if (name == "Gk") std::cout << "Gk(" << sn << ")=" << v << " k=" << sk << '\n';
      else std::cout << name << '(' << sn << ")=" << v << '\n';
      return 0;
    }

    if (*ver) {
      bool ok = true;
      for (const auto& r : run_suite(suite, {seed, jobs, budget})) {
        std::cout << format_result(r) << std::endl;
        ok = ok && r.pass;
      }
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
