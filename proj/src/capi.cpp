
#include "cpg.h"

#include <limits>
#include <new>
#include <string>
#include <utility>

#include "json.hpp"

#include "cpg/automorphism.hpp"
#include "cpg/catalog.hpp"
#include "cpg/cp.hpp"
#include "cpg/errors.hpp"
#include "cpg/fp.hpp"
#include "cpg/homalg.hpp"
#include "cpg/knot.hpp"
#include "cpg/perm.hpp"

using json = nlohmann::ordered_json;

struct cpg_group {
  cpg::PermGroup group;
  std::string description;
};

struct cpg_presentation {
  cpg::FpPresentation presentation;
  std::string text;
};

struct cpg_report {
  cpg_status status;
  std::string result;
  std::string json;
  std::string text;
};

namespace {

thread_local std::string last_error;

void set_error(std::string message) { last_error = std::move(message); }

json jint(const cpg::Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json jab(const cpg::AbelianStructure& a) {
  json t = json::array();
  for (const auto& d : a.torsion()) t.push_back(jint(d));
  json out;
  out["structure"] = a.to_string();
  out["free_rank"] = a.free_rank();
  out["torsion"] = std::move(t);
  return out;
}

json jperms(const std::vector<cpg::Perm>& perms) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(p.to_string());
  return out;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// key=value lines; nested keys join with '.', array entries use [i].
void flatten(const json& v, const std::string& key, std::string& out) {
  if (v.is_object()) {
    if (v.empty()) out += key + "={}\n";
    for (const auto& [k, child] : v.items()) flatten(child, key.empty() ? k : key + "." + k, out);
  } else if (v.is_array()) {
    if (v.empty()) out += key + "=[]\n";
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], key + "[" + std::to_string(i) + "]", out);
  } else {
    out += key + "=" + scalar_text(v) + "\n";
  }
}

struct Outcome {
  cpg_status status;
  json body;  // must start with "result"
};

template <class F>
cpg_status guarded(cpg_report** out, F&& f) {
  if (out == nullptr) {
    set_error("output pointer is NULL");
    return CPG_INPUT_ERROR;
  }
  *out = nullptr;
  try {
    Outcome o = f();
    auto* r = new cpg_report;
    r->status = o.status;
    r->result = scalar_text(o.body["result"]);
    r->json = o.body.dump(2);
    flatten(o.body, "", r->text);
    *out = r;
    return o.status;
  } catch (const cpg::Error& e) {
    set_error(e.what());
    return static_cast<cpg_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return CPG_BUDGET_EXHAUSTED;
  } catch (const std::exception& e) {
    set_error(std::string("internal error: ") + e.what());
    return CPG_INTERNAL_ERROR;
  }
}

template <class T>
const T& require(const T* handle, const char* what) {
  if (handle == nullptr) throw cpg::InputError(std::string(what) + " handle is NULL");
  return *handle;
}

const char* require_text(const char* s, const char* what) {
  if (s == nullptr) throw cpg::InputError(std::string(what) + " is NULL");
  return s;
}

cpg_options options_or_default(const cpg_options* o) {
  cpg_options d;
  cpg_options_default(&d);
  if (o == nullptr) return d;
  if (o->aut_node_budget != 0) d.aut_node_budget = o->aut_node_budget;
  if (o->max_cosets != 0) d.max_cosets = o->max_cosets;
  return d;
}

cpg::AutSearchOptions aut_options(const cpg_options& o) {
  cpg::AutSearchOptions a;
  a.node_budget = o.aut_node_budget;
  return a;
}

void require_p(std::int64_t p) {
  if (p < 1) throw cpg::InputError("p must be at least 1, got " + std::to_string(p));
}

std::vector<cpg::Perm> parse_images(const cpg::FpPresentation& g, const std::string& text) {
  std::vector<cpg::Perm> images;
  std::size_t start = 0;
  std::size_t degree = 0;
  std::vector<std::string> parts;
  while (true) {
    std::size_t end = text.find(';', start);
    parts.push_back(text.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  for (const auto& s : parts) degree = std::max(degree, cpg::Perm::parse(s).degree());
  for (const auto& s : parts) images.push_back(cpg::Perm::parse(s, degree));
  if (images.size() != g.generator_count())
    throw cpg::InputError("expected " + std::to_string(g.generator_count()) +
                          " images separated by ';', got " + std::to_string(images.size()));
  return images;
}

json subgroup_presentation_json(const cpg::SubgroupPresentation& s,
                                const cpg::FpPresentation& parent) {
  json gens = json::array();
  for (std::size_t i = 0; i < s.generator_words.size(); ++i)
    gens.push_back({{"name", s.presentation.generator_names()[i]},
                    {"word", s.generator_words[i].to_string(parent.generator_names())}});
  json out;
  out["presentation"] = s.presentation.to_string();
  out["schreier_generators"] = s.schreier_generator_count;
  out["rewritten_relators"] = s.rewritten_relator_count;
  out["generators"] = std::move(gens);
  out["abelianization"] = jab(cpg::abelianization(s.presentation));
  return out;
}

json verdict_json(const cpg::CpVerdict& v) {
  json out;
  out["status"] = cpg::to_string(v.status);
  out["reason"] = cpg::to_string(v.reason);
  out["group_order"] = jint(v.group_order);
  out["cp_order"] = jint(v.cp_order);
  out["complete"] = v.complete ? json(*v.complete) : json("not computed");
  out["aut_order"] = v.aut_order ? jint(*v.aut_order) : json("not computed");
  out["cp_aut_order"] = v.cp_aut_order ? jint(*v.cp_aut_order) : json("not computed");
  out["witness"] = v.witness;
  out["notes"] = v.notes;
  return out;
}

std::string verdict_headline(const cpg::CpVerdict& v) {
  return cpg::to_string(v.status) + " (" + cpg::to_string(v.reason) + ")";
}

}  // namespace

extern "C" {

void cpg_options_default(cpg_options* options) {
  if (options == nullptr) return;
  options->aut_node_budget = cpg::AutSearchOptions{}.node_budget;
  options->max_cosets = cpg::kDefaultMaxCosets;
}

const char* cpg_version(void) { return "0.1.0"; }

const char* cpg_last_error(void) { return last_error.c_str(); }

const char* cpg_status_name(cpg_status status) {
  switch (status) {
    case CPG_OK: return "ok";
    case CPG_FALSE: return "false";
    case CPG_INPUT_ERROR: return "input_error";
    case CPG_BUDGET_EXHAUSTED: return "budget_exhausted";
    case CPG_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

cpg_status cpg_group_parse(const char* spec, cpg_group** out) {
  if (out == nullptr) {
    set_error("output pointer is NULL");
    return CPG_INPUT_ERROR;
  }
  *out = nullptr;
  try {
    auto g = cpg::parse_group(require_text(spec, "group text"));
    std::string d = cpg::describe_group(g);
    *out = new cpg_group{std::move(g), std::move(d)};
    return CPG_OK;
  } catch (const cpg::Error& e) {
    set_error(e.what());
    return static_cast<cpg_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    set_error(std::string("internal error: ") + e.what());
    return CPG_INTERNAL_ERROR;
  }
}

const char* cpg_group_describe(const cpg_group* group) {
  return group ? group->description.c_str() : "";
}

void cpg_group_free(cpg_group* group) { delete group; }

cpg_status cpg_presentation_parse(const char* text, cpg_presentation** out) {
  if (out == nullptr) {
    set_error("output pointer is NULL");
    return CPG_INPUT_ERROR;
  }
  *out = nullptr;
  try {
    auto p = cpg::parse_presentation(require_text(text, "presentation text"));
    std::string t = p.to_string();
    *out = new cpg_presentation{std::move(p), std::move(t)};
    return CPG_OK;
  } catch (const cpg::Error& e) {
    set_error(e.what());
    return static_cast<cpg_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    set_error(std::string("internal error: ") + e.what());
    return CPG_INTERNAL_ERROR;
  }
}

const char* cpg_presentation_text(const cpg_presentation* presentation) {
  return presentation ? presentation->text.c_str() : "";
}

void cpg_presentation_free(cpg_presentation* presentation) { delete presentation; }

cpg_status cpg_report_status(const cpg_report* report) {
  return report ? report->status : CPG_INPUT_ERROR;
}
const char* cpg_report_result(const cpg_report* report) { return report ? report->result.c_str() : ""; }
const char* cpg_report_json(const cpg_report* report) { return report ? report->json.c_str() : ""; }
const char* cpg_report_text(const cpg_report* report) { return report ? report->text.c_str() : ""; }
void cpg_report_free(cpg_report* report) { delete report; }

cpg_status cpg_order(const cpg_group* g, cpg_report** out) {
  return guarded(out, [&] {
    const auto& G = require(g, "group").group;
    json b;
    b["result"] = cpg::describe_group(G);
    b["order"] = jint(cpg::group_order(G));
    b["degree"] = G.degree();
    b["generators"] = jperms(G.generators());
    json base = json::array();
    for (auto pt : G.base()) base.push_back(pt + 1);
    b["base"] = std::move(base);
    b["orbit_lengths"] = G.orbit_lengths();
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_cp_subgroup(const cpg_group* g, int64_t p, cpg_report** out) {
  return guarded(out, [&] {
    const auto& G = require(g, "group").group;
    require_p(p);
    cpg::PermGroup C = cpg::cp_subgroup(G, p);
    json b;
    b["result"] = cpg::describe_group(C);
    b["p"] = p;
    b["group"] = cpg::describe_group(G);
    b["order"] = jint(C.order());
    b["index"] = jint(G.order() / C.order());
    b["generators"] = jperms(C.generators());
    try {
      b["quotient"] = jab(cpg::tensor_with_zp(cpg::abelian_invariants(G), p));
    } catch (const cpg::BudgetExhausted&) {
      b["quotient"] = "not computed: abelianization too large";
    }
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_cp_quotient(const cpg_presentation* g, int64_t p, cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    require_p(p);
    auto q = cpg::cp_quotient_fp(P, p);
    json b;
    b["result"] = q.to_string();
    b["p"] = p;
    b["presentation"] = P.to_string();
    b["abelianization"] = jab(cpg::abelianization(P));
    b["quotient"] = jab(q);
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_cp_kernel(const cpg_presentation* g, int64_t p, const cpg_options* options,
                         cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    require_p(p);
    auto o = options_or_default(options);
    cpg::CpKernel k = cpg::cp_kernel_presentation(P, p, o.max_cosets);
    json b;
    b["result"] = k.subgroup.presentation.to_string();
    b["p"] = p;
    b["index"] = k.table.index();
    b["quotient"] = jab(k.quotient);
    b["subgroup"] = subgroup_presentation_json(k.subgroup, P);
    return Outcome{CPG_OK, std::move(b)};
  });
}

namespace {

Outcome series_outcome(const cpg::PSeriesReport& r, bool presented) {
  json levels = json::array();
  std::string headline;
  for (const auto& l : r.levels) {
    json e;
    e["level"] = l.level;
    e["index"] = jint(l.index);
    e["quotient"] = jab(l.quotient);
    e["group"] = l.group;
    if (presented) e["abelianization"] = jab(cpg::abelianization(*l.presentation));
    else e["order"] = jint(l.subgroup->order());
    levels.push_back(std::move(e));
    headline += (headline.empty() ? "" : ", ") + l.quotient.to_string();
  }
  if (r.truncated) headline += (headline.empty() ? "" : ", ") + std::string("truncated at level ") +
                               std::to_string(r.truncated_at);
  json b;
  b["result"] = "quotients " + headline;
  b["p"] = jint(r.p);
  b["depth"] = r.depth;
  b["levels"] = std::move(levels);
  b["truncated"] = r.truncated;
  b["truncated_at"] = r.truncated_at;
  b["truncation_reason"] = r.truncation_reason;
  return Outcome{r.truncated ? CPG_BUDGET_EXHAUSTED : CPG_OK, std::move(b)};
}

}  // namespace

cpg_status cpg_series_presentation(const cpg_presentation* g, int64_t p, uint32_t depth,
                                   const cpg_options* options, cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    require_p(p);
    auto o = options_or_default(options);
    return series_outcome(cpg::derived_p_series(P, p, depth, o.max_cosets), true);
  });
}

cpg_status cpg_series_group(const cpg_group* g, int64_t p, uint32_t depth, cpg_report** out) {
  return guarded(out, [&] {
    const auto& G = require(g, "group").group;
    require_p(p);
    return series_outcome(cpg::derived_p_series(G, p, depth), false);
  });
}

cpg_status cpg_verdict(const cpg_group* g, int64_t p, const cpg_options* options, cpg_report** out) {
  return guarded(out, [&] {
    const auto& G = require(g, "group").group;
    require_p(p);
    auto o = options_or_default(options);
    auto v = cpg::cp_group_verdict(G, p, aut_options(o));
    json b;
    b["result"] = verdict_headline(v);
    b["p"] = p;
    b["group"] = cpg::describe_group(G);
    json vj = verdict_json(v);
    for (auto& [k, val] : vj.items()) b[k] = val;
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_aut(const cpg_group* g, const cpg_options* options, cpg_report** out) {
  return guarded(out, [&] {
    const auto& G = require(g, "group").group;
    auto o = options_or_default(options);
    auto aut = cpg::aut_group_search(G, aut_options(o));
    const auto& t = aut.table();
    json outer = json::array();
    for (const auto& m : aut.maps())
      if (!m.inner) {
        for (auto img : m.generator_images) outer.push_back(t.element(img).to_string());
        break;
      }
    const bool complete_group = aut.complete() && aut.inner_count() == t.size() && aut.size() == aut.inner_count();
    json b;
    b["result"] = aut.complete() ? "order " + std::to_string(aut.size())
                                 : "at least " + std::to_string(aut.size()) + " (search budget exhausted)";
    b["group"] = cpg::describe_group(G);
    b["order"] = aut.size();
    b["inner_order"] = aut.inner_count();
    b["outer_order"] = aut.complete() ? json(aut.size() / aut.inner_count()) : json("unknown");
    b["search_complete"] = aut.complete();
    b["complete_group"] = complete_group;
    b["nodes"] = aut.nodes_explored();
    b["generators"] = jperms(G.generators());
    b["outer_example"] = std::move(outer);
    return Outcome{aut.complete() ? CPG_OK : CPG_BUDGET_EXHAUSTED, std::move(b)};
  });
}

cpg_status cpg_coset_enum(const cpg_presentation* g, const char* subgroup, const cpg_options* options,
                          cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    auto o = options_or_default(options);
    auto H = P.parse_word_list(subgroup ? subgroup : "");
    auto r = cpg::todd_coxeter(P, H, o.max_cosets);
    json words = json::array();
    for (const auto& h : H) words.push_back(h.to_string(P.generator_names()));
    json b;
    if (r.status == cpg::EnumerationStatus::kClosed) {
      b["result"] = "index " + std::to_string(r.table->index());
      b["status"] = "closed";
      b["index"] = r.table->index();
    } else {
      b["result"] = "unknown: coset budget exhausted after " + std::to_string(r.cosets_defined) + " cosets";
      b["status"] = "budget_exhausted";
      b["index"] = "unknown";
    }
    b["presentation"] = P.to_string();
    b["subgroup"] = std::move(words);
    b["cosets_defined"] = r.cosets_defined;
    if (r.table && r.table->index() <= cpg::kMaxPermDegree) {
      json perms = json::array();
      auto gp = r.table->generator_permutations();
      for (std::size_t i = 0; i < gp.size(); ++i)
        perms.push_back({{"generator", P.generator_names()[i]}, {"action", gp[i].to_string()}});
      b["generator_actions"] = std::move(perms);
    }
    return Outcome{r.table ? CPG_OK : CPG_BUDGET_EXHAUSTED, std::move(b)};
  });
}

cpg_status cpg_kernel_table(const cpg_presentation* g, const char* images, const cpg_options* options,
                            cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    auto o = options_or_default(options);
    auto imgs = parse_images(P, require_text(images, "images"));
    auto t = cpg::kernel_coset_table(P, imgs, o.max_cosets);
    json b;
    b["result"] = "index " + std::to_string(t.index());
    b["presentation"] = P.to_string();
    b["images"] = jperms(imgs);
    b["homomorphism"] = true;
    b["index"] = t.index();
    json words = json::array();
    for (const auto& s : t.subgroup_generators()) words.push_back(s.to_string(P.generator_names()));
    b["schreier_generators"] = std::move(words);
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_rs(const cpg_presentation* g, const char* subgroup, const char* images,
                  const cpg_options* options, cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    auto o = options_or_default(options);
    std::optional<cpg::CosetTable> table;
    if (images != nullptr) {
      table = cpg::kernel_coset_table(P, parse_images(P, images), o.max_cosets);
    } else {
      auto r = cpg::todd_coxeter(P, P.parse_word_list(subgroup ? subgroup : ""), o.max_cosets);
      if (!r.table)
        throw cpg::BudgetExhausted("coset enumeration exhausted its budget after " +
                                   std::to_string(r.cosets_defined) + " cosets");
      table = std::move(r.table);
    }
    auto s = cpg::reidemeister_schreier(*table);
    json b;
    b["result"] = s.presentation.to_string();
    b["index"] = table->index();
    json sj = subgroup_presentation_json(s, P);
    for (auto& [k, v] : sj.items()) b[k] = v;
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_abelianize(const cpg_presentation* g, cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    auto a = cpg::abelianization(P);
    json b;
    b["result"] = a.to_string();
    b["presentation"] = P.to_string();
    b["relation_matrix"] = cpg::relation_matrix(P).to_string();
    json aj = jab(a);
    for (auto& [k, v] : aj.items()) b[k] = v;
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_snf(const char* matrix, cpg_report** out) {
  return guarded(out, [&] {
    auto m = cpg::IntMatrix::parse(require_text(matrix, "matrix"));
    auto s = cpg::smith_normal_form(m);
    json diag = json::array();
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) diag.push_back(jint(s.diagonal(i, i)));
    json b;
    b["result"] = s.diagonal.to_string();
    b["matrix"] = m.to_string();
    b["U"] = s.left.to_string();
    b["D"] = s.diagonal.to_string();
    b["V"] = s.right.to_string();
    b["diagonal"] = std::move(diag);
    b["cokernel"] = jab(cpg::cokernel_structure(m));
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_torus_cover(int64_t m, int64_t n, int64_t p, cpg_report** out) {
  return guarded(out, [&] {
    bool exists = cpg::torus_preimage_exists(m, n, p);
    cpg::Integer g = boost::multiprecision::gcd(boost::multiprecision::abs(cpg::Integer(m) * n),
                                                boost::multiprecision::abs(cpg::Integer(p)));
    json b;
    b["result"] = exists ? "exists" : "no preimage (gcd(mn, p) = " + g.str() + ")";
    b["m"] = m;
    b["n"] = n;
    b["p"] = p;
    b["gcd_mn_p"] = jint(g);
    b["exists"] = exists;
    b["knot_group"] = cpg::torus_knot_group(m, n).to_string();
    return Outcome{exists ? CPG_OK : CPG_FALSE, std::move(b)};
  });
}

cpg_status cpg_chbili_q(int64_t m, int64_t n, int64_t p, cpg_report** out) {
  return guarded(out, [&] {
    auto a = cpg::chbili_q(m, n, p);
    json b;
    if (a.exists) {
      b["result"] = "q = " + a.q.str() + " (inverse class " + a.q_inverse.str() + ")";
    } else {
      b["result"] = "none (gcd(mn, p) = " +
                    cpg::Integer(boost::multiprecision::gcd(boost::multiprecision::abs(a.m * a.n), a.p)).str() + ")";
    }
    b["m"] = m;
    b["n"] = n;
    b["p"] = p;
    b["exists"] = a.exists;
    if (a.exists) {
      b["p_star"] = jint(a.p_star);
      b["q"] = jint(a.q);
      b["q_inverse"] = jint(a.q_inverse);
      b["m_minus_nq"] = jint(a.m_minus_nq);
      b["p_divides_m_minus_nq"] = a.p_divides_m_minus_nq;
      b["q_coprime_to_p"] = a.q_coprime_to_p;
    }
    return Outcome{a.exists ? CPG_OK : CPG_FALSE, std::move(b)};
  });
}

cpg_status cpg_components(int64_t p, int64_t c, cpg_report** out) {
  return guarded(out, [&] {
    auto r = cpg::preimage_component_count(p, c);
    json b;
    b["result"] = r.str();
    b["p"] = p;
    b["class"] = c;
    b["class_order"] = jint(cpg::Integer(p) / r);
    b["components"] = jint(r);
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_trefoil_obstruction(int64_t p, cpg_report** out) {
  return guarded(out, [&] {
    auto r = cpg::trefoil_even_obstruction(p);
    json steps = json::array();
    for (const auto& s : r.steps) steps.push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
    json b;
    b["result"] = r.obstructed ? "OBSTRUCTED" : "NOT OBSTRUCTED";
    b["p"] = p;
    b["steps"] = std::move(steps);
    b["kernel_index"] = r.kernel_index;
    b["schreier_generator_count"] = r.schreier_generator_count;
    b["schreier_generators"] = r.schreier_generators;
    b["s3_verdict"] = verdict_json(r.s3_verdict);
    b["assumptions"] = r.assumptions;
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_out_obstruction(const cpg_presentation* g, int assert_out_trivial, int64_t p_max,
                               cpg_report** out) {
  return guarded(out, [&] {
    const auto& P = require(g, "presentation").presentation;
    auto r = cpg::complete_group_obstruction(P, assert_out_trivial != 0, p_max);
    json levels = json::array();
    bool all = true;
    for (const auto& l : r.levels) {
      levels.push_back({{"p", jint(l.p)}, {"quotient", jab(l.quotient)}, {"obstructed", l.obstructed}});
      all = all && l.obstructed;
    }
    json b;
    b["result"] = std::string(all ? "OBSTRUCTED" : "PARTIAL") + " for p = 2.." + std::to_string(p_max) +
                  ", conditional on Out(G) = 1";
    b["presentation"] = P.to_string();
    b["abelianization"] = jab(r.abelianization);
    b["levels"] = std::move(levels);
    b["assumptions"] = r.assumptions;
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_s6(int64_t p, const cpg_options* options, cpg_report** out) {
  return guarded(out, [&] {
    auto o = options_or_default(options);
    auto r = cpg::verify_s6_pipeline(p, aut_options(o));
    json b;
    b["result"] = verdict_headline(r.verdict);
    b["p"] = p;
    b["aut_order"] = jint(r.aut_order);
    b["inn_order"] = jint(r.inn_order);
    b["cp_aut_order"] = jint(r.cp_aut_order);
    b["alpha_order"] = jint(r.alpha_order);
    b["cp_equals_alpha"] = r.cp_equals_alpha;
    b["inn_contained_in_cp"] = r.inn_contained_in_cp;
    b["inn_witness"] = r.inn_witness;
    b["index_aut_inn"] = jint(r.index_aut_inn);
    b["index_aut_cp"] = jint(r.index_aut_cp);
    b["counting_identity_holds"] = r.counting_identity_holds;
    b["psi_images"] = r.psi_images;
    b["psi_square_tau"] = r.tau;
    b["tau_in_a6"] = r.tau_in_a6;
    b["search_nodes"] = r.search_nodes;
    b["verdict"] = verdict_json(r.verdict);
    return Outcome{CPG_OK, std::move(b)};
  });
}

cpg_status cpg_e2_table(int64_t m, int64_t n, int64_t p, uint32_t s_max, uint32_t t_max,
                        cpg_report** out) {
  return guarded(out, [&] {
    auto t = cpg::lhs_e2_table(m, n, p, s_max, t_max);
    json entries = json::array();
    for (unsigned s = 0; s <= s_max; ++s)
      for (unsigned tt = 0; tt <= t_max; ++tt)
        entries.push_back({{"s", s}, {"t", tt}, {"group", t.at(s, tt).to_string()}});
    json totals = json::array();
    const unsigned kmax = std::min(s_max, t_max);
    for (unsigned k = 0; k <= kmax; ++k)
      totals.push_back({{"k", k},
                        {"total", t.total(k).to_string()},
                        {"expected", cpg::cyclic_homology(cpg::Integer(m) * n * p, k).to_string()}});
    json b;
    b["result"] = "totals match H_*(Z_" + (cpg::Integer(m) * n * p).str() + ") through degree " +
                  std::to_string(kmax);
    b["m"] = m;
    b["n"] = n;
    b["p"] = p;
    b["entries"] = std::move(entries);
    b["totals"] = std::move(totals);
    return Outcome{CPG_OK, std::move(b)};
  });
}

size_t cpg_catalog_size(void) { return cpg::verify_catalog().size(); }

const char* cpg_catalog_id(size_t index) {
  const auto& c = cpg::verify_catalog();
  return index < c.size() ? c[index].id.c_str() : nullptr;
}

const char* cpg_catalog_description(size_t index) {
  const auto& c = cpg::verify_catalog();
  return index < c.size() ? c[index].description.c_str() : nullptr;
}

cpg_status cpg_verify(const char* id, cpg_report** out) {
  return guarded(out, [&] {
    std::string which = require_text(id, "catalog id");
    std::vector<const cpg::CatalogItem*> items;
    if (which == "all") {
      for (const auto& item : cpg::verify_catalog()) items.push_back(&item);
    } else if (const auto* item = cpg::find_catalog_item(which)) {
      items.push_back(item);
    } else {
      throw cpg::InputError("unknown catalog id '" + which + "'");
    }
    json results = json::array();
    std::size_t passed = 0;
    for (const auto* item : items) {
      cpg::CatalogOutcome o;
      try {
        o = item->run();
      } catch (const std::exception& e) {
        o.passed = false;
        o.detail = std::string("exception: ") + e.what();
      }
      passed += o.passed ? 1 : 0;
      results.push_back({{"id", item->id},
                         {"passed", o.passed},
                         {"detail", o.detail}});
    }
    json b;
    b["result"] = std::to_string(passed) + "/" + std::to_string(items.size()) + " passed";
    b["passed"] = passed;
    b["total"] = items.size();
    b["items"] = std::move(results);
    return Outcome{passed == items.size() ? CPG_OK : CPG_FALSE, std::move(b)};
  });
}

}  // extern "C"
