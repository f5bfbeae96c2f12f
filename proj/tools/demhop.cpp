// Command-line front end: Demazure products on types A, B and D from
// one-line notation, hop traces, decompositions, liftings, group dumps and
// the exhaustive verification suites.

#include <CLI11.hpp>
#include <iostream>

#include "demhop/demazure.hpp"
#include "demhop/io.hpp"
#include "demhop/verify.hpp"

namespace {

using namespace demhop;

struct ProductArgs {
  std::string family = "d";
  int rank = 0;
  std::string left, right;
  std::string method = "hopping";
  bool json = false;
  bool trace = false;
};

int run_product(const ProductArgs& a) {
  Family f = parse_family(a.family);
  Window lw = parse_window(a.left, a.rank);
  Window rw = parse_window(a.right, a.rank);
  validate_window(f, lw);
  validate_window(f, rw);

  ProductChain chain;
  ProductChain* chain_ptr = a.trace ? &chain : nullptr;
  if (a.trace && a.method != "hopping")
    throw std::invalid_argument("--trace requires --method hopping");

  Window product;
  if (a.method == "hopping") {
    switch (f) {
      case Family::A:
        product = demazure_hop_a(Perm(lw), Perm(rw), chain_ptr).window();
        break;
      case Family::B:
        product = demazure_hop_b(SignedWindow(lw), SignedWindow(rw), chain_ptr).window();
        break;
      case Family::D:
        product = demazure_hop_d(EvenSignedWindow(lw), EvenSignedWindow(rw), chain_ptr).window();
        break;
    }
  } else if (a.method == "oracle") {
    product = demazure_oracle(Element(f, lw), Element(f, rw)).w;
  } else if (a.method == "unfolded") {
    if (f != Family::B) throw std::invalid_argument("--method unfolded is a type B route");
    product = demazure_unfolded_b(SignedWindow(lw), SignedWindow(rw)).window();
  } else if (a.method == "plain") {
    product = compose_windows(f, lw, rw);
  } else {
    throw std::invalid_argument("unknown method '" + a.method + "'");
  }

  if (a.json) {
    std::cout << product_to_json(f, a.rank, lw, rw, product, a.method, chain_ptr).dump(2) << '\n';
  } else {
    if (a.trace) std::cout << format_chain_multiline(chain);
    std::cout << format_window(product) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure (0-Hecke) products on Coxeter groups of types A, B and D,\n"
               "computed from one-line notation via hopping operators."};
  app.require_subcommand(1);

  ProductArgs pa;
  auto add_product_opts = [&](CLI::App* cmd, bool with_method) {
    cmd->add_option("-f,--family", pa.family, "group family: a, b or d")->capture_default_str();
    cmd->add_option("-n,--rank", pa.rank, "rank n")->required();
    cmd->add_option("left", pa.left, "left window, e.g. \"[2,-4,-1,5,3]\" or id")->required();
    cmd->add_option("right", pa.right, "right window")->required();
    if (with_method)
      cmd->add_option("--method", pa.method, "hopping | oracle | unfolded | plain")
          ->capture_default_str();
    cmd->add_flag("--json", pa.json, "emit JSON");
  };

  CLI::App* product = app.add_subcommand("product", "compute u * v (or plain uv)");
  add_product_opts(product, true);
  product->add_flag("--trace", pa.trace, "print the hop-operator chain");

  CLI::App* trace = app.add_subcommand("trace", "compute u * v by hopping and print the chain");
  add_product_opts(trace, false);

  struct {
    std::string family = "d";
    int rank = 0;
    std::string window;
    bool json = false;
  } wa;
  CLI::App* decompose = app.add_subcommand("decompose", "maximal parabolic decomposition (type D)");
  decompose->add_option("-f,--family", wa.family, "must be d")->capture_default_str();
  decompose->add_option("-n,--rank", wa.rank, "rank n")->required();
  decompose->add_option("window", wa.window, "even signed window")->required();
  decompose->add_flag("--json", wa.json, "emit JSON");

  CLI::App* lift = app.add_subcommand("lift", "print the lifting lists of a window");
  lift->add_option("-f,--family", wa.family, "group family: a, b or d")->capture_default_str();
  lift->add_option("-n,--rank", wa.rank, "rank n")->required();
  lift->add_option("window", wa.window, "window")->required();
  lift->add_flag("--json", wa.json, "emit JSON");

  struct {
    std::string family = "d";
    int rank = 4;
    std::string suite;
    int samples = -1;
    std::uint64_t seed = 12345;
    bool json = false;
  } va;
  CLI::App* verify = app.add_subcommand("verify", "run a named identity suite");
  verify->add_option("-f,--family", va.family, "group family for family-generic suites")
      ->capture_default_str();
  verify->add_option("-n,--rank", va.rank, "rank n")->capture_default_str();
  std::string suite_list;
  for (const std::string& s : demhop::suite_names()) suite_list += (suite_list.empty() ? "" : ", ") + s;
  verify->add_option("--suite", va.suite, "one of: " + suite_list)->required();
  verify->add_option("--sample", va.samples, "sample count (0 = exhaustive where applicable)");
  verify->add_option("--seed", va.seed, "sampling seed")->capture_default_str();
  verify->add_flag("--json", va.json, "emit JSON");

  struct {
    std::string family = "d";
    int rank = 3;
  } ea;
  CLI::App* enumerate = app.add_subcommand("enumerate", "dump a group table (window, length, word)");
  enumerate->add_option("-f,--family", ea.family, "group family")->capture_default_str();
  enumerate->add_option("-n,--rank", ea.rank, "rank n")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (product->parsed()) return run_product(pa);
    if (trace->parsed()) {
      pa.method = "hopping";
      pa.trace = true;
      return run_product(pa);
    }

    if (decompose->parsed()) {
      if (parse_family(wa.family) != Family::D)
        throw std::invalid_argument("decompose is defined for family d");
      EvenSignedWindow w(parse_window(wa.window, wa.rank));
      Decomposition d = decompose_d(w);
      if (wa.json) {
        std::cout << decomposition_to_json(d).dump(2) << '\n';
      } else {
        for (const QFactor& q : d.factors) {
          std::cout << "Q_" << q.level << ": form " << q.form;
          if ((q.form == 1 || q.form == 2) && q.level <= q.n - 2) std::cout << ", j=" << q.j;
          std::cout << ", word " << format_word(q_word(q)) << ", window "
                    << format_window(realize_q(q).window()) << '\n';
        }
      }
      return 0;
    }

    if (lift->parsed()) {
      Family f = parse_family(wa.family);
      Window win = parse_window(wa.window, wa.rank);
      validate_window(f, win);
      const int top = f == Family::B ? wa.rank : wa.rank - 1;
      json jlifts = json::array();
      for (int i = 1; i <= top; ++i) {
        HopList list;
        switch (f) {
          case Family::A: list = lift_a(Perm::unchecked(win), i); break;
          case Family::B: list = lift_b(SignedWindow::unchecked(win), i); break;
          case Family::D: list = lift_d(EvenSignedWindow(SignedWindow::unchecked(win)), i); break;
        }
        if (wa.json) jlifts.push_back({{"i", i}, {"list", list}});
        else std::cout << "lift " << i << ": " << format_window(list) << '\n';
      }
      if (wa.json)
        std::cout << json{{"family", family_name(f)}, {"rank", wa.rank}, {"window", win},
                          {"lifts", jlifts}}.dump(2)
                  << '\n';
      return 0;
    }

    if (verify->parsed()) {
      SuiteOptions opt;
      opt.family = parse_family(va.family);
      opt.rank = va.rank;
      opt.seed = va.seed;
      if (va.samples >= 0) opt.samples = va.samples;
      else if (va.suite == "interval") opt.samples = 500;
      SuiteResult res = run_suite(va.suite, opt);
      if (va.json) {
        std::cout << json{{"suite", res.name},
                          {"domain", res.domain},
                          {"checked", res.checked},
                          {"failed", res.failed},
                          {"counterexample", res.counterexample}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << res.summary() << '\n';
        if (!res.ok()) std::cout << "first counterexample: " << res.counterexample << '\n';
      }
      return res.ok() ? 0 : 1;
    }

    if (enumerate->parsed()) {
      dump_table(cached_table(parse_family(ea.family), ea.rank), std::cout);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
