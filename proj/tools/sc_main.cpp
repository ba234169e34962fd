// Command-line surface: one verb per library operation.
#include <iostream>

#include "CLI11.hpp"
#include "sc/io.hpp"

namespace {

sc::Complex load_complex(const std::string& filename) {
  return sc::read_complex(sc::read_text_file(filename));
}

void emit(const std::string& out_file, const std::string& text) {
  if (out_file.empty())
    std::cout << text;
  else
    sc::write_text_file(out_file, text);
}

int run_info(const std::string& file) {
  auto k = load_complex(file);
  std::cout << "vertices: " << k.n_vertices() << "\n";
  std::cout << "maximal simplices: " << k.maximal_simplices().size() << "\n";
  std::cout << "dimension: " << k.dim() << "\n";
  std::cout << "f-vector: (";
  auto f = k.f_vector();
  for (size_t i = 0; i < f.size(); ++i) std::cout << (i ? ", " : "") << f[i];
  std::cout << ")\n";
  std::cout << "euler characteristic: " << k.euler_characteristic() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified upper bounds for the simplicial complexity of finite ordered "
               "complexes, with piecewise-linear motion planners extracted from the "
               "certificates"};
  app.require_subcommand(1);

  std::string info_file;
  auto* info = app.add_subcommand("info", "print basic facts about a complex document");
  info->add_option("complex", info_file, "complex JSON document")->required();

  std::string prod_a, prod_b, prod_out;
  auto* product = app.add_subcommand("product", "ordered product of two complexes");
  product->add_option("a", prod_a)->required();
  product->add_option("b", prod_b)->required();
  product->add_option("--out", prod_out, "output file (default stdout)");

  std::string sub_file, sub_out;
  int sub_b = 1;
  long long sub_size_budget = sc::kDefaultSizeBudget;
  auto* subdivide = app.add_subcommand("subdivide", "iterated barycentric subdivision");
  subdivide->add_option("complex", sub_file)->required();
  subdivide->add_option("--b", sub_b, "number of subdivisions")->required();
  subdivide->add_option("--size-budget", sub_size_budget, "top-simplex guardrail");
  subdivide->add_option("--out", sub_out, "output file (default stdout)");

  std::string bound_file, bound_out, bound_policy = "max";
  sc::BoundOptions bopt;
  auto* bound = app.add_subcommand("bound",
                                   "search for a cover certificate bounding the simplicial "
                                   "complexity from above");
  bound->add_option("complex", bound_file)->required();
  bound->add_option("--b", bopt.b, "subdivision level")->required();
  bound->add_option("--cmax", bopt.c_max, "largest admissible chain length")->required();
  bound->add_option("--pieces", bopt.max_pieces, "largest admissible cover size")->required();
  bound->add_option("--seed", bopt.seed, "random seed (default 0)");
  bound->add_option("--budget", bopt.restart_budget, "chain-search restarts per piece");
  bound->add_option("--size-budget", bopt.size_budget, "top-simplex guardrail");
  bound->add_option("--policy", bound_policy, "approximation policy: max or min");
  bound->add_option("--out", bound_out, "certificate output file")->required();

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "re-check a certificate from its bytes");
  verify->add_option("certificate", verify_file)->required();

  std::string plan_cert, plan_embedding, plan_out;
  std::vector<double> plan_x, plan_y;
  int plan_samples = 0;
  auto* plan = app.add_subcommand("plan",
                                  "evaluate the motion planner of a certificate on a "
                                  "configuration pair");
  plan->add_option("certificate", plan_cert)->required();
  plan->add_option("--embedding", plan_embedding, "embedding of the base complex")->required();
  plan->add_option("--x", plan_x, "start configuration")->required()->delimiter(',');
  plan->add_option("--y", plan_y, "goal configuration")->required()->delimiter(',');
  plan->add_option("--samples", plan_samples, "emit N+1 even samples instead of breakpoints");
  plan->add_option("--out", plan_out, "output file (default stdout)");

  std::string ex_name, ex_out, ex_embedding_out;
  auto* example = app.add_subcommand("example", "built-in example complexes");
  example->add_option("name", ex_name, "circle | interval | simplex(n) | torus")->required();
  example->add_option("--out", ex_out, "complex output file (default stdout)");
  example->add_option("--embedding-out", ex_embedding_out, "also write the built-in embedding");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return run_info(info_file);

    if (product->parsed()) {
      auto result = sc::ordered_product(sc::share(load_complex(prod_a)),
                                        sc::share(load_complex(prod_b)));
      emit(prod_out, sc::write_complex(*result.complex));
      return 0;
    }

    if (subdivide->parsed()) {
      auto tower = sc::iterated_subdivision(sc::share(load_complex(sub_file)), sub_b,
                                            sub_size_budget);
      emit(sub_out, sc::write_complex(*tower.level(sub_b)));
      return 0;
    }

    if (bound->parsed()) {
      bopt.policy = sc::policy_from_name(bound_policy);
      auto k = sc::share(load_complex(bound_file));
      auto report = sc::sc_upper_bound(k, bopt);
      std::cout << report.summary() << "\n";
      if (!report.bound) return 2;
      sc::write_text_file(bound_out, sc::write_certificate(*report.certificate));
      // re-read the bytes just written and verify them
      auto reread = sc::read_certificate(sc::read_text_file(bound_out), bopt.size_budget);
      auto check = sc::verify_certificate(reread, bopt.size_budget);
      if (!check.ok) {
        std::cerr << "re-verification of the written certificate failed: " << check.diagnostic
                  << "\n";
        return 1;
      }
      std::cout << "certificate written to " << bound_out << " and re-verified\n";
      return 0;
    }

    if (verify->parsed()) {
      auto cert = sc::read_certificate(sc::read_text_file(verify_file));
      auto check = sc::verify_certificate(cert);
      if (check.ok) {
        std::cout << "PASS: certificate verifies (bound " << cert.bound() << ", b = " << cert.b
                  << ", c = " << cert.c << ", policy = " << sc::policy_name(cert.policy)
                  << ")\n";
        return 0;
      }
      std::cout << "FAIL: " << check.diagnostic << "\n";
      return 1;
    }

    if (plan->parsed()) {
      auto cert = sc::read_certificate(sc::read_text_file(plan_cert));
      auto check = sc::verify_certificate(cert);
      if (!check.ok) {
        std::cerr << "certificate does not verify: " << check.diagnostic << "\n";
        return 1;
      }
      auto embedding = sc::read_embedding(sc::read_text_file(plan_embedding), *cert.base);
      auto tower = sc::build_product_tower(cert.base, cert.b);
      auto path = sc::make_path(cert, tower, embedding, plan_x, plan_y);
      if (plan_samples > 0) {
        sc::PLPath sampled;
        for (int s = 0; s <= plan_samples; ++s) {
          double t = static_cast<double>(s) / plan_samples;
          sampled.times.push_back(t);
          sampled.breakpoints.push_back(sc::evaluate_path(path, t));
        }
        path = std::move(sampled);
      }
      emit(plan_out, sc::write_path(path));
      return 0;
    }

    if (example->parsed()) {
      auto k = sc::example_complex(ex_name);
      emit(ex_out, sc::write_complex(k));
      if (!ex_embedding_out.empty()) {
        auto e = sc::example_embedding(ex_name);
        if (!e) throw std::invalid_argument("no built-in embedding for " + ex_name);
        sc::write_text_file(ex_embedding_out, sc::write_embedding(*e, k));
      }
      return 0;
    }
  } catch (const sc::SizeBudgetError& e) {
    std::cerr << "guardrail: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
