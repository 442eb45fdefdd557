#include "toric/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "toric/error.hpp"
#include "toric/fan2d.hpp"
#include "toric/isomorphism.hpp"
#include "toric/json_io.hpp"
#include "toric/monoid.hpp"
#include "toric/replica.hpp"
#include "toric/roots.hpp"

namespace toric {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

struct PayloadOpts {
  std::string inline_json;
  std::string input;

  Json load() const {
    if (!inline_json.empty()) return parse_json(inline_json);
    if (!input.empty()) return parse_json(slurp(input));
    throw ParseError("no input given (positional JSON or --input FILE|-)");
  }
};

void add_payload(CLI::App* cmd, PayloadOpts& p) {
  cmd->add_option("payload", p.inline_json, "inline JSON payload");
  cmd->add_option("--input", p.input, "read the payload from FILE (- is stdin)");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing \"") + key + "\"");
  return j.at(key);
}

// an `iso` argument is inline JSON or a path to a JSON file
Json arg_or_file(const std::string& a) {
  if (!a.empty() && (a[0] == '{' || a[0] == '[')) return parse_json(a);
  return parse_json(slurp(a));
}

std::size_t tower_cap() {
  const char* env = std::getenv("TORIC_AUT_MAX_TOWER");
  if (env == nullptr) return 12;
  Json j = Json::parse(std::string(env), nullptr, false);
  if (j.is_discarded() || !j.is_number_unsigned())
    throw ParseError("TORIC_AUT_MAX_TOWER must be a nonnegative integer");
  return j.get<std::size_t>();
}

Json vec_list(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const Vec& v : vs) a.push_back(vec_to_json(v));
  return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact automorphism data of affine toric varieties", "toric-aut"};
  app.require_subcommand(1);

  int rc = 0;
  auto emit = [&](Json result) {
    out << ok_envelope(std::move(result)).dump() << "\n";
    rc = 0;
  };

  PayloadOpts dual_p;
  auto* dual_cmd = app.add_subcommand("dual", "dual cone of a cone");
  add_payload(dual_cmd, dual_p);
  dual_cmd->callback([&] { emit(cone_to_json(json_to_cone(dual_p.load()).dual())); });

  PayloadOpts rays_p;
  auto* rays_cmd =
      app.add_subcommand("rays", "extremal rays and lineality of a cone");
  add_payload(rays_cmd, rays_p);
  rays_cmd->callback([&] {
    Cone c = json_to_cone(rays_p.load());
    Json res = Json::object();
    res["ambient_rank"] = c.ambient_rank();
    res["rays"] = vec_list(c.rays());
    res["lineality"] = vec_list(c.lineality());
    emit(std::move(res));
  });

  PayloadOpts hilbert_p;
  auto* hilbert_cmd =
      app.add_subcommand("hilbert", "Hilbert basis of the cone's lattice points");
  add_payload(hilbert_cmd, hilbert_p);
  hilbert_cmd->callback([&] {
    Json res = Json::object();
    res["hilbert_basis"] = vec_list(hilbert_basis(json_to_cone(hilbert_p.load())));
    emit(std::move(res));
  });

  PayloadOpts member_p;
  auto* member_cmd =
      app.add_subcommand("member", "membership and decomposition over the Hilbert basis");
  add_payload(member_cmd, member_p);
  member_cmd->callback([&] {
    Json p = member_p.load();
    AffineMonoid m(json_to_cone(field(p, "cone")));
    Vec pt = json_to_vec(field(p, "point"));
    auto dec = m.decompose(pt);
    Json res = Json::object();
    res["member"] = dec.has_value();
    if (dec) {
      Json terms = Json::array();
      for (const auto& [g, k] : *dec) {
        Json t = Json::object();
        t["generator"] = vec_to_json(g);
        t["multiplicity"] = int_to_json(k);
        terms.push_back(std::move(t));
      }
      res["decomposition"] = terms;
    }
    emit(std::move(res));
  });

  PayloadOpts weight_p;
  auto* weight_cmd =
      app.add_subcommand("weight-monoid", "generators of the dual cone's lattice points");
  add_payload(weight_cmd, weight_p);
  weight_cmd->callback([&] {
    Json res = Json::object();
    res["generators"] =
        vec_list(weight_monoid(json_to_cone(weight_p.load())).generators());
    emit(std::move(res));
  });

  PayloadOpts inv_p;
  unsigned long long inv_ray = 0;
  auto* inv_cmd =
      app.add_subcommand("invariants", "generators of a ray's invariant subalgebra");
  add_payload(inv_cmd, inv_p);
  inv_cmd->add_option("--ray", inv_ray, "extremal ray index")->required();
  inv_cmd->callback([&] {
    AffineMonoid s = invariant_subalgebra(json_to_cone(inv_p.load()), inv_ray);
    Json res = Json::object();
    res["generators"] = vec_list(s.generators());
    emit(std::move(res));
  });

  PayloadOpts roots_p;
  long long roots_bound = 0;
  auto* roots_cmd =
      app.add_subcommand("roots", "all root weights within an infinity-norm bound");
  add_payload(roots_cmd, roots_p);
  roots_cmd->add_option("--bound", roots_bound, "infinity-norm bound")
      ->required()
      ->check(CLI::NonNegativeNumber);
  roots_cmd->callback([&] {
    Cone c = json_to_cone(roots_p.load());
    std::vector<DemazureRoot> roots =
        enumerate_roots(c, Int(static_cast<long>(roots_bound)));
    Json groups = Json::array();
    for (std::size_t i = 0; i < c.rays().size(); ++i) {
      Json g = Json::object();
      g["ray"] = i;
      Json w = Json::array();
      for (const DemazureRoot& r : roots)
        if (r.ray_index == i) w.push_back(vec_to_json(r.weight));
      g["weights"] = w;
      groups.push_back(std::move(g));
    }
    emit(std::move(groups));
  });

  PayloadOpts find_p;
  unsigned long long find_ray = 0;
  auto* find_cmd =
      app.add_subcommand("find-root", "smallest root weight for one ray");
  add_payload(find_cmd, find_p);
  find_cmd->add_option("--ray", find_ray, "extremal ray index")->required();
  find_cmd->callback(
      [&] { emit(root_to_json(find_root(json_to_cone(find_p.load()), find_ray))); });

  PayloadOpts torus_p;
  auto* torus_cmd = app.add_subcommand("is-torus", "is the variety a torus");
  add_payload(torus_cmd, torus_p);
  torus_cmd->callback([&] {
    Json res = Json::object();
    res["is_torus"] = is_torus(json_to_cone(torus_p.load()));
    emit(std::move(res));
  });

  PayloadOpts family_p;
  unsigned long long family_ray = 0;
  auto* family_cmd = app.add_subcommand(
      "family", "commuting root family with independent weights for one ray");
  add_payload(family_cmd, family_p);
  family_cmd->add_option("--ray", family_ray, "extremal ray index")->required();
  family_cmd->callback([&] {
    Cone c = json_to_cone(family_p.load());
    DemazureRoot e0 = find_root(c, family_ray);
    std::vector<DemazureRoot> fam = commuting_root_family(c, family_ray, e0.weight);
    Json res = Json::object();
    res["ray"] = family_ray;
    Json w = Json::array();
    for (const DemazureRoot& r : fam) w.push_back(vec_to_json(r.weight));
    res["weights"] = w;
    emit(std::move(res));
  });

  auto* replica_cmd = app.add_subcommand("replica", "root-subgroup replicas");
  replica_cmd->require_subcommand(1);

  PayloadOpts apply_p;
  auto* apply_cmd =
      replica_cmd->add_subcommand("apply", "apply a replica to a function");
  add_payload(apply_cmd, apply_p);
  apply_cmd->callback([&] {
    Json p = apply_p.load();
    ReplicaAutomorphism r(json_to_cone(field(p, "cone")),
                          json_to_root(field(p, "root")),
                          json_to_function(field(p, "f")));
    emit(function_to_json(r.apply(json_to_function(field(p, "g")))));
  });

  PayloadOpts commute_p;
  auto* commute_cmd =
      replica_cmd->add_subcommand("commute", "do two replicas commute");
  add_payload(commute_cmd, commute_p);
  commute_cmd->callback([&] {
    Json p = commute_p.load();
    Cone c = json_to_cone(field(p, "cone"));
    auto mk = [&](const Json& spec) {
      return ReplicaAutomorphism(c, json_to_root(field(spec, "root")),
                                 json_to_function(field(spec, "f")));
    };
    Json res = Json::object();
    res["commute"] = replica_commutes(mk(field(p, "a")), mk(field(p, "b")));
    emit(std::move(res));
  });

  PayloadOpts conj_p;
  auto* conj_cmd =
      replica_cmd->add_subcommand("conjugate", "conjugate a replica by a torus element");
  add_payload(conj_cmd, conj_p);
  conj_cmd->callback([&] {
    Json p = conj_p.load();
    const Json& tj = field(p, "t");
    if (!tj.is_array()) throw ParseError("\"t\" must be an array of rationals");
    std::vector<Rat> t;
    for (const Json& c : tj) t.push_back(json_to_rat(c));
    ReplicaAutomorphism r(json_to_cone(field(p, "cone")),
                          json_to_root(field(p, "root")),
                          json_to_function(field(p, "f")));
    ReplicaAutomorphism conj = torus_conjugate(t, r);
    Json res = Json::object();
    res["root"] = root_to_json(conj.root());
    res["f"] = function_to_json(conj.invariant());
    emit(std::move(res));
  });

  PayloadOpts du_p;
  auto* du_cmd = app.add_subcommand(
      "du-cert", "connectedness and span certificate for a root's kernel torus");
  add_payload(du_cmd, du_p);
  du_cmd->callback([&] {
    Json p = du_p.load();
    emit(du_report_to_json(du_orbit_certificate(json_to_cone(field(p, "cone")),
                                                json_to_root(field(p, "root")))));
  });

  std::string iso_a, iso_b;
  auto* iso_cmd =
      app.add_subcommand("iso", "decide lattice-equivalence of two cones");
  iso_cmd->add_option("a", iso_a, "cone JSON or file")->required();
  iso_cmd->add_option("b", iso_b, "cone JSON or file")->required();
  iso_cmd->callback([&] {
    Cone a = json_to_cone(arg_or_file(iso_a));
    Cone b = json_to_cone(arg_or_file(iso_b));
    emit(witness_to_json(cones_equivalent(a, b)));
  });

  PayloadOpts fp_p;
  auto* fp_cmd =
      app.add_subcommand("fingerprint", "cheap equivalence invariants of a cone");
  add_payload(fp_cmd, fp_p);
  fp_cmd->callback(
      [&] { emit(fingerprint_to_json(cone_fingerprint(json_to_cone(fp_p.load())))); });

  unsigned long long tower_steps = 0;
  std::string tower_report;
  bool tower_svg = false;
  auto* tower_cmd = app.add_subcommand("tower", "blow-up tower over the plane");
  tower_cmd->add_option("--steps", tower_steps, "tower level")->required();
  tower_cmd->add_option("--report", tower_report, "selfint, picard, or aut")
      ->check(CLI::IsMember({"selfint", "picard", "aut"}));
  tower_cmd->add_flag("--svg", tower_svg, "emit an SVG drawing instead of JSON");
  tower_cmd->callback([&] {
    Fan2D fan = tower_fan(tower_steps, tower_cap());
    if (tower_svg) {
      out << fan_svg(fan);
      rc = 0;
      return;
    }
    if (tower_report.empty()) {
      emit(fan_to_json(fan));
    } else if (tower_report == "picard") {
      Json res = Json::object();
      res["picard_rank"] = picard_rank(fan);
      emit(std::move(res));
    } else if (tower_report == "selfint") {
      Json res = Json::object();
      res["rays"] = vec_list(fan.rays());
      Json d = Json::array();
      for (const Int& x : self_intersections(fan)) d.push_back(int_to_json(x));
      res["self_intersections"] = d;
      emit(std::move(res));
    } else {
      Json res = Json::object();
      Json maps = Json::array();
      for (const Mat& g : fan_automorphisms(fan)) maps.push_back(mat_to_json(g));
      res["count"] = maps.size();
      res["maps"] = maps;
      emit(std::move(res));
    }
  });

  PayloadOpts selfint_p;
  auto* selfint_cmd =
      app.add_subcommand("selfint", "self-intersections of a fan's invariant curves");
  add_payload(selfint_cmd, selfint_p);
  selfint_cmd->callback([&] {
    Fan2D fan = json_to_fan(selfint_p.load());
    Json res = Json::object();
    res["rays"] = vec_list(fan.rays());
    Json d = Json::array();
    for (const Int& x : self_intersections(fan)) d.push_back(int_to_json(x));
    res["self_intersections"] = d;
    Json neg = Json::array();
    for (const auto& [ray, d2] : negative_ray_report(fan)) {
      Json e = Json::object();
      e["ray"] = vec_to_json(ray);
      e["d2"] = int_to_json(d2);
      neg.push_back(std::move(e));
    }
    res["negative"] = neg;
    emit(std::move(res));
  });

  PayloadOpts picard_p;
  auto* picard_cmd = app.add_subcommand("picard", "Picard rank of a fan's surface");
  add_payload(picard_cmd, picard_p);
  picard_cmd->callback([&] {
    Json res = Json::object();
    res["picard_rank"] = picard_rank(json_to_fan(picard_p.load()));
    emit(std::move(res));
  });

  PayloadOpts fanaut_p;
  auto* fanaut_cmd =
      app.add_subcommand("fan-aut", "unimodular symmetries of a complete fan");
  add_payload(fanaut_cmd, fanaut_p);
  fanaut_cmd->callback([&] {
    Json res = Json::object();
    Json maps = Json::array();
    for (const Mat& g : fan_automorphisms(json_to_fan(fanaut_p.load())))
      maps.push_back(mat_to_json(g));
    res["count"] = maps.size();
    res["maps"] = maps;
    emit(std::move(res));
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const DomainError& e) {
    out << error_envelope(e.code(), e.what()).dump() << "\n";
    return 1;
  } catch (const ParseError& e) {
    out << error_envelope("PARSE", e.what()).dump() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace toric
