// Command-line front end over the C interface.

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cpg.h"

namespace {

struct Globals {
  std::string format = "text";
  std::uint64_t budget = 0;
  std::uint64_t max_cosets = 0;
  cpg_options options() const {
    cpg_options o;
    cpg_options_default(&o);
    if (budget) o.aut_node_budget = budget;
    if (max_cosets) o.max_cosets = max_cosets;
    return o;
  }
};

int fail(cpg_status s) {
  std::cerr << "error (" << cpg_status_name(s) << "): " << cpg_last_error() << "\n";
  return static_cast<int>(s);
}

int emit(const Globals& g, cpg_status s, cpg_report* r) {
  if (r == nullptr) return fail(s);
  if (g.format == "json") {
    std::cout << cpg_report_json(r) << "\n";
  } else {
    // Headline first, then the remaining fields as key=value lines.
    std::string text = cpg_report_text(r);
    std::size_t eol = text.find('\n');
    std::string first = text.substr(0, eol);
    if (first.rfind("result=", 0) == 0) first = first.substr(7);
    std::cout << first << "\n" << (eol == std::string::npos ? "" : text.substr(eol + 1));
  }
  cpg_report_free(r);
  if (s == CPG_BUDGET_EXHAUSTED) std::cerr << "budget exhausted: result is partial\n";
  return static_cast<int>(s);
}

int with_group(const std::string& spec, const std::function<cpg_status(cpg_group*)>& f) {
  cpg_group* g = nullptr;
  cpg_status s = cpg_group_parse(spec.c_str(), &g);
  if (s != CPG_OK) return fail(s);
  int rc = f(g);
  cpg_group_free(g);
  return rc;
}

int with_presentation(const std::string& text, const std::function<cpg_status(cpg_presentation*)>& f) {
  cpg_presentation* p = nullptr;
  cpg_status s = cpg_presentation_parse(text.c_str(), &p);
  if (s != CPG_OK) return fail(s);
  int rc = f(p);
  cpg_presentation_free(p);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cpg: the C^p subgroup workbench"};
  app.set_version_flag("--version", std::string(cpg_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", gl.budget, "Automorphism search node budget");
  app.add_option("--max-cosets", gl.max_cosets, "Coset enumeration and quotient index cap");

  std::string group, pres, subgroup, images, matrix, id;
  std::int64_t p = 0, m = 0, n = 0, c = 0, p_max = 6;
  std::uint32_t depth = 2, s_max = 6, t_max = 6;
  bool assert_out = false, list = false;
  std::function<int()> run;
  const auto opts = [&] { return gl.options(); };

  auto* order = app.add_subcommand("order", "Order and stabilizer chain of a permutation group");
  order->add_option("--group", group, "Group, e.g. S5 or \"(1 2), (1 2 3)\"")->required();
  order->callback([&] {
    run = [&] { return with_group(group, [&](cpg_group* g) { cpg_report* r; auto s = cpg_order(g, &r); return (cpg_status)emit(gl, s, r); }); };
  });

  auto* cps = app.add_subcommand("cp-subgroup", "C^p subgroup of a permutation group");
  cps->add_option("--group", group)->required();
  cps->add_option("--p", p)->required();
  cps->callback([&] {
    run = [&] { return with_group(group, [&](cpg_group* g) { cpg_report* r; auto s = cpg_cp_subgroup(g, p, &r); return (cpg_status)emit(gl, s, r); }); };
  });

  auto* cpq = app.add_subcommand("cp-quotient", "Abelian quotient G/C^p(G) of a presented group");
  cpq->add_option("--presentation", pres)->required();
  cpq->add_option("--p", p)->required();
  cpq->callback([&] {
    run = [&] { return with_presentation(pres, [&](cpg_presentation* g) { cpg_report* r; auto s = cpg_cp_quotient(g, p, &r); return (cpg_status)emit(gl, s, r); }); };
  });

  auto* cpk = app.add_subcommand("cp-kernel", "Presentation of C^p(G) for a presented group");
  cpk->add_option("--presentation", pres)->required();
  cpk->add_option("--p", p)->required();
  cpk->callback([&] {
    run = [&] {
      return with_presentation(pres, [&](cpg_presentation* g) {
        cpg_report* r; auto o = opts(); auto s = cpg_cp_kernel(g, p, &o, &r); return (cpg_status)emit(gl, s, r);
      });
    };
  });

  auto* ser = app.add_subcommand("series", "Derived p-series to a given depth");
  auto* sg = ser->add_option("--group", group);
  auto* sp = ser->add_option("--presentation", pres);
  sg->excludes(sp);
  ser->add_option("--p", p)->required();
  ser->add_option("--depth", depth, "Number of levels")->capture_default_str();
  ser->callback([&] {
    if (!*sg && !*sp) throw CLI::ValidationError("series", "one of --group or --presentation is required");
    run = [&, by_group = static_cast<bool>(*sg)] {
      if (by_group)
        return with_group(group, [&](cpg_group* g) { cpg_report* r; auto s = cpg_series_group(g, p, depth, &r); return (cpg_status)emit(gl, s, r); });
      return with_presentation(pres, [&](cpg_presentation* g) {
        cpg_report* r; auto o = opts(); auto s = cpg_series_presentation(g, p, depth, &o, &r); return (cpg_status)emit(gl, s, r);
      });
    };
  });

  auto* ver = app.add_subcommand("verdict", "Is the group a C^p-group?");
  ver->add_option("--group", group)->required();
  ver->add_option("--p", p)->required();
  ver->callback([&] {
    run = [&] {
      return with_group(group, [&](cpg_group* g) { cpg_report* r; auto o = opts(); auto s = cpg_verdict(g, p, &o, &r); return (cpg_status)emit(gl, s, r); });
    };
  });

  auto* aut = app.add_subcommand("aut", "Automorphism group by search");
  aut->add_option("--group", group)->required();
  aut->callback([&] {
    run = [&] {
      return with_group(group, [&](cpg_group* g) { cpg_report* r; auto o = opts(); auto s = cpg_aut(g, &o, &r); return (cpg_status)emit(gl, s, r); });
    };
  });

  auto* ce = app.add_subcommand("coset-enum", "Todd-Coxeter coset enumeration");
  ce->add_option("--presentation", pres)->required();
  auto* ce_sub = ce->add_option("--subgroup", subgroup, "Comma-separated subgroup words");
  auto* ce_img = ce->add_option("--images", images, "Generator images separated by ';' (kernel)");
  ce_sub->excludes(ce_img);
  ce->callback([&] {
    run = [&, kernel = static_cast<bool>(*ce_img)] {
      return with_presentation(pres, [&](cpg_presentation* g) {
        cpg_report* r; auto o = opts();
        auto s = kernel ? cpg_kernel_table(g, images.c_str(), &o, &r) : cpg_coset_enum(g, subgroup.c_str(), &o, &r);
        return (cpg_status)emit(gl, s, r);
      });
    };
  });

  auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier subgroup presentation");
  rs->add_option("--presentation", pres)->required();
  auto* rs_sub = rs->add_option("--subgroup", subgroup, "Comma-separated subgroup words");
  auto* rs_img = rs->add_option("--images", images, "Generator images separated by ';' (kernel)");
  rs_sub->excludes(rs_img);
  rs->callback([&] {
    run = [&, kernel = static_cast<bool>(*rs_img)] {
      return with_presentation(pres, [&](cpg_presentation* g) {
        cpg_report* r; auto o = opts();
        auto s = cpg_rs(g, subgroup.c_str(), kernel ? images.c_str() : nullptr, &o, &r);
        return (cpg_status)emit(gl, s, r);
      });
    };
  });

  auto* ab = app.add_subcommand("abelianize", "Abelianization of a presented group");
  ab->add_option("--presentation", pres)->required();
  ab->callback([&] {
    run = [&] { return with_presentation(pres, [&](cpg_presentation* g) { cpg_report* r; auto s = cpg_abelianize(g, &r); return (cpg_status)emit(gl, s, r); }); };
  });

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", matrix, "Matrix, e.g. \"[[2, 4], [6, 8]]\"")->required();
  snf->callback([&] {
    run = [&] { cpg_report* r; auto s = cpg_snf(matrix.c_str(), &r); return emit(gl, s, r); };
  });

  auto* tc = app.add_subcommand("torus-cover", "Is T(m,n) a p-fold cyclic cover preimage?");
  tc->add_option("m", m)->required();
  tc->add_option("n", n)->required();
  tc->add_option("p", p)->required();
  tc->callback([&] { run = [&] { cpg_report* r; auto s = cpg_torus_cover(m, n, p, &r); return emit(gl, s, r); }; });

  auto* cq = app.add_subcommand("chbili-q", "Lens space L(p,q) for a torus knot preimage");
  cq->add_option("m", m)->required();
  cq->add_option("n", n)->required();
  cq->add_option("p", p)->required();
  cq->callback([&] { run = [&] { cpg_report* r; auto s = cpg_chbili_q(m, n, p, &r); return emit(gl, s, r); }; });

  auto* comp = app.add_subcommand("components", "Components of the preimage of a knot of class c");
  comp->add_option("p", p)->required();
  comp->add_option("c", c)->required();
  comp->callback([&] { run = [&] { cpg_report* r; auto s = cpg_components(p, c, &r); return emit(gl, s, r); }; });

  auto* tro = app.add_subcommand("trefoil-obstruction", "Certified trefoil obstruction for even p");
  tro->add_option("--p", p)->required();
  tro->callback([&] { run = [&] { cpg_report* r; auto s = cpg_trefoil_obstruction(p, &r); return emit(gl, s, r); }; });

  auto* oo = app.add_subcommand("out-obstruction", "Obstruction for knot groups with trivial Out");
  oo->add_option("--presentation", pres)->required();
  oo->add_flag("--assert-out-trivial", assert_out, "Assert Out(G) = 1 (not checked)");
  oo->add_option("--p-max", p_max)->capture_default_str();
  oo->callback([&] {
    run = [&] {
      return with_presentation(pres, [&](cpg_presentation* g) {
        cpg_report* r; auto s = cpg_out_obstruction(g, assert_out ? 1 : 0, p_max, &r); return (cpg_status)emit(gl, s, r);
      });
    };
  });

  auto* s6 = app.add_subcommand("s6", "Aut(S6) pipeline");
  s6->add_option("--p", p)->required();
  s6->callback([&] { run = [&] { cpg_report* r; auto o = opts(); auto s = cpg_s6(p, &o, &r); return emit(gl, s, r); }; });

  auto* e2 = app.add_subcommand("e2-table", "E2 page for Z_mn by Z_p");
  e2->add_option("m", m)->required();
  e2->add_option("n", n)->required();
  e2->add_option("p", p)->required();
  e2->add_option("--s-max", s_max)->capture_default_str();
  e2->add_option("--t-max", t_max)->capture_default_str();
  e2->callback([&] { run = [&] { cpg_report* r; auto s = cpg_e2_table(m, n, p, s_max, t_max, &r); return emit(gl, s, r); }; });

  auto* vf = app.add_subcommand("verify", "Replay reference checks");
  vf->add_option("id", id, "Catalog id or 'all'");
  vf->add_flag("--list", list, "List catalog ids");
  vf->callback([&] {
    if (!list && id.empty()) throw CLI::ValidationError("verify", "an id or --list is required");
    run = [&] {
      if (list) {
        for (std::size_t i = 0; i < cpg_catalog_size(); ++i)
          std::cout << cpg_catalog_id(i) << "  " << cpg_catalog_description(i) << "\n";
        return 0;
      }
      cpg_report* r; auto s = cpg_verify(id.c_str(), &r); return emit(gl, s, r);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return run ? run() : 2;
}
