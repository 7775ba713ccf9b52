#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "csurg/error.hpp"
#include "csurg/kirby/construct.hpp"
#include "csurg/kirby/serialize.hpp"
#include "csurg/scenario/runner.hpp"
#include "csurg/surgery/calculus.hpp"
#include "csurg/surgery/text.hpp"

namespace fs = std::filesystem;
using namespace csurg;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  double tol = 1e-5;
  bool tol_set = false;
  std::size_t samples = 0;
  std::string out;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

int emit(const Globals& g, const std::string& text, int code = 0) {
  if (g.out.empty())
    std::cout << text;
  else
    write_text(g.out, text);
  return code;
}

int emit_lines(const Globals& g, const std::vector<scenario::ReportLine>& lines) {
  std::string text;
  bool failed = false;
  for (const auto& l : lines) {
    text += scenario::format_line(l) + "\n";
    failed |= l.failed();
  }
  return emit(g, text, failed ? 1 : 0);
}

int run_file(const Globals& g, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << path << ": cannot open\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    scenario::RunOptions opts;
    opts.seed = g.seed;
    if (g.samples > 0) opts.samples = g.samples;
    if (g.tol_set) opts.tolerance = g.tol;
    const auto result = scenario::run_scenario(scenario::parse_scenario(buf.str()), opts);
    const fs::path dir = g.out.empty() ? fs::current_path() : fs::path(g.out).parent_path();
    for (const auto& f : result.files) write_text((dir / f.path).string(), f.content);
    return emit(g, result.report, result.any_failed ? 1 : 0);
  } catch (const scenario::ScenarioError& e) {
    std::cerr << path << ":" << e.position().line << ":" << e.position().column << ": "
              << scenario::to_string(e.kind()) << " error: " << e.message() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contact surgery, open books and Weinstein cobordisms"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
  auto* tol = app.add_option("--tol", g.tol, "tolerance for numeric checks")->capture_default_str();
  app.add_option("--samples", g.samples, "sample count override");
  app.add_option("--out", g.out, "write output here instead of stdout");

  auto* verify = app.add_subcommand("verify", "numeric verification");
  verify->require_subcommand(1);
  std::string form_id = "darboux";
  int n = 1;
  auto* forms = verify->add_subcommand("forms", "contact condition of a catalog form");
  forms->add_option("--form", form_id, "form id")->capture_default_str();
  forms->add_option("--n", n, "half dimension")->capture_default_str();
  auto* twist = verify->add_subcommand("twist", "Dehn twist preserves -d lambda_can");
  twist->add_option("--n", n, "sphere dimension")->capture_default_str();
  double eps = 0.5;
  twist->add_option("--eps", eps, "twist support radius")->capture_default_str();

  std::vector<int> ks;
  auto* compose = app.add_subcommand("compose", "combine 1/k surgeries on push-offs");
  compose->add_option("k", ks, "coefficients")->required()->allow_extra_args();

  int base_k = 1, k = -1, q = 2;
  std::string param = "P0";
  auto* surgery = app.add_subcommand("surgery", "contact (1/k)-surgery on the zero section of M_{n,b}");
  surgery->add_option("--n", n)->capture_default_str();
  surgery->add_option("--base-k", base_k, "b in M_{n,b}")->capture_default_str();
  surgery->add_option("--k", k)->capture_default_str();
  surgery->add_option("--param", param, "parametrization id")->capture_default_str();

  auto* cover = app.add_subcommand("cover", "cyclic branched cover of M_{n,b} along the page");
  cover->add_option("--n", n)->capture_default_str();
  cover->add_option("--base-k", base_k)->capture_default_str();
  cover->add_option("--q", q)->capture_default_str();

  std::string phi = "id", psi = "id";
  auto* fibered = app.add_subcommand("fibered", "M_(D*S^n, phi, psi)");
  fibered->add_option("--n", n)->capture_default_str();
  fibered->add_option("--phi", phi, "word in L")->capture_default_str();
  fibered->add_option("--psi", psi, "word in L")->capture_default_str();

  int surgery_k = 0;
  auto* kirby = app.add_subcommand("kirby", "Kirby diagram of a branched-cover or surgery cobordism");
  kirby->add_option("--q", q, "cover degree for the genus-1 page in L(2,1)")->capture_default_str();
  kirby->add_option("--surgery-k", surgery_k, "draw the (1/k)-surgery cobordism instead");

  std::string file;
  auto* run = app.add_subcommand("run", "replay a scenario file");
  run->add_option("file", file)->required()->check(CLI::ExistingFile);

  app.fallthrough();
  CLI11_PARSE(app, argc, argv);
  g.tol_set = tol->count() > 0;

  try {
    if (*forms) {
      return emit_lines(g, {scenario::verify_contact(form_id, n, g.samples ? g.samples : 100, g.seed)});
    }
    if (*twist) {
      return emit_lines(g, {scenario::verify_twist(n, g.samples ? g.samples : 50, g.seed, eps, g.tol)});
    }
    if (*compose) {
      const auto c = surgery::surgery_compose(ks);
      return emit(g, (c ? std::to_string(*c) : std::string("none")) + "\n");
    }
    if (*surgery) {
      return emit(g, surgery::serialize(
                         surgery::contact_surgery(surgery::catalog_M_nk(n, base_k), "L", k, param)));
    }
    if (*cover) {
      return emit(g, surgery::serialize(
                         surgery::branched_cover(surgery::catalog_M_nk(n, base_k), "page", q)));
    }
    if (*fibered) {
      return emit(g, surgery::serialize(surgery::fibered_manifold(
                         surgery::cotangent_disk_page(n), surgery::parse_word(phi),
                         surgery::parse_word(psi))));
    }
    if (*kirby) {
      const auto d = surgery_k != 0
                         ? kirby::surgery_cobordism_diagram(surgery_k)
                         : kirby::branched_cover_diagram(kirby::genus_one_page(),
                                                         kirby::lens_space_base(), q);
      return emit(g, kirby::serialize_diagram(d));
    }
    if (*run) return run_file(g, file);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
