#include <sstream>

#include <json.hpp>

#include "crdyn/scenario.hpp"
#include "crdyn/suites.hpp"

namespace crdyn::cli {

namespace {

using Json = nlohmann::ordered_json;

template <class R>
typename R::point_type to_point(const Scalar& x) {
  if constexpr (std::is_same_v<R, BoxRelation>) {
    return x;
  } else {
    return static_cast<std::size_t>(std::stoul(x.numerator()));
  }
}

std::string entry_label(const TraceEntry& e) {
  return "(i=" + std::to_string(e.segment) + ",j=" + std::to_string(e.j) + ")";
}

Json entries_json(const TraceReport& r) {
  Json out = Json::array();
  for (const auto& e : r.entries) {
    out.push_back({{"segment", e.segment}, {"j", e.j}, {"exponent", e.exponent}, {"distance", e.distance.to_string()}});
  }
  return out;
}

Json report_json(const TraceReport& r) {
  Json out;
  out["mode"] = to_string(r.mode);
  out["eps"] = r.eps.to_string();
  out["passed"] = r.passed;
  out["entries"] = entries_json(r);
  return out;
}

void write_entries(std::ostream& os, const TraceReport& r) {
  for (const auto& e : r.entries) {
    os << "    " << entry_label(e) << " exponent " << e.exponent << ": " << e.distance << "\n";
  }
  if (!r.entries.empty()) {
    os << "    worst " << r.worst_entry().distance << " at " << entry_label(r.worst_entry()) << ", eps " << r.eps
       << "\n";
  }
}

template <ClosedRelation R>
Json failures_json(const NoTracer<R>& none) {
  Json cells = Json::array();
  for (const auto& c : none.cells) {
    Json bounds = Json::array();
    for (const auto& b : c.lower_bounds) bounds.push_back(b.to_string());
    cells.push_back({{"cell", cell_label(c.cell)},
                     {"representative", point_label(c.representative)},
                     {"worst", c.worst().to_string()},
                     {"failing", {{"segment", c.failing_entry().segment}, {"j", c.failing_entry().j}}},
                     {"constraints_infeasible", c.constraints_infeasible},
                     {"lower_bounds", bounds},
                     {"report", report_json(c.report)}});
  }
  return cells;
}

template <ClosedRelation R>
void write_failures(std::ostream& os, const NoTracer<R>& none) {
  for (const auto& c : none.cells) {
    os << "    cell " << cell_label(c.cell) << ": worst " << c.worst() << " at " << entry_label(c.failing_entry())
       << ", representative " << point_label(c.representative);
    if (c.constraints_infeasible) os << " (constraints infeasible)";
    os << "\n";
  }
}

template <ClosedRelation R>
Json witness_json(const TracerWitness<R>& w) {
  return {{"y", point_label(w.y)}, {"cell", cell_label(w.cell)}, {"report", report_json(w.report)}};
}

class Runner {
 public:
  Runner(const Scenario& s, std::uint64_t seed) : s_(s), seed_(seed) {}

  template <ClosedRelation R>
  std::string execute(const R& f, const Command& cmd, Json& block, std::ostream& os) {
    switch (cmd.kind) {
      case Command::Kind::trace:
        return trace(f, cmd, block, os);
      case Command::Kind::find:
        return find(f, cmd, block, os);
      case Command::Kind::certify:
        return certify(f, cmd, block, os);
      case Command::Kind::refute:
        return refute(f, cmd, block, os);
      case Command::Kind::surjectivity: {
        const auto s = check_surjectivity(f);
        block["first_full"] = s.first_full;
        block["second_full"] = s.second_full;
        os << "  first projection full: " << (s.first_full ? "yes" : "no")
           << ", second projection full: " << (s.second_full ? "yes" : "no") << "\n";
        return s.first_full && s.second_full ? "pass" : "fail";
      }
      case Command::Kind::suite:
        return suite(cmd, block, os);
      default:
        if constexpr (std::is_same_v<R, FiniteRelation>) return mahavier(f, cmd, block, os);
        throw InvalidArgument("shift-space analyses need a finite ambient space");
    }
  }

 private:
  template <ClosedRelation R>
  std::string trace(const R& f, const Command& cmd, Json& block, std::ostream& os) {
    const auto& d = *s_.find_spec(cmd.spec);
    const auto y = to_point<R>(cmd.y);
    TraceReport r;
    if (d.initial) {
      r = check_initial_trace(f, initial_spec(f, d), y, cmd.eps, cmd.mode);
    } else {
      r = check_trace(f, spaced_spec(f, d), y, cmd.eps, cmd.mode);
    }
    block["report"] = report_json(r);
    write_entries(os, r);
    return r.passed ? "pass" : "fail";
  }

  template <ClosedRelation R>
  std::string find(const R& f, const Command& cmd, Json& block, std::ostream& os) {
    const auto& d = *s_.find_spec(cmd.spec);
    const auto result = d.initial ? find_initial_tracer(f, initial_spec(f, d), cmd.eps, cmd.mode)
                                  : find_tracer(f, spaced_spec(f, d), cmd.eps, cmd.mode);
    if (const auto* w = std::get_if<TracerWitness<R>>(&result)) {
      block["witness"] = witness_json(*w);
      os << "  tracer y = " << point_label(w->y) << " in cell " << cell_label(w->cell) << "\n";
      write_entries(os, w->report);
      return "pass";
    }
    const auto& none = std::get<NoTracer<R>>(result);
    block["cells"] = failures_json(none);
    os << "  no tracer in any cell\n";
    write_failures(os, none);
    return "fail";
  }

  template <ClosedRelation R>
  std::string certify(const R& f, const Command& cmd, Json& block, std::ostream& os) {
    CertificateSearch<R> result = NotFound{};
    if (cmd.certificate == "common-image") {
      result = certify_common_image(f, cmd.n0_max);
    } else if (cmd.certificate == "full-image") {
      result = certify_full_image(f, cmd.n0_max);
    } else if (cmd.certificate == "eventual-hausdorff") {
      result = certify_eventual_hausdorff(f, cmd.eps, cmd.n0_max);
    } else {
      result = certify_trivial_fiber(f);
    }
    if (const auto* nf = std::get_if<NotFound>(&result)) {
      block["reason"] = nf->reason;
      os << "  " << nf->reason << "\n";
      return "notfound";
    }
    const auto& cert = std::get<Certificate<R>>(result);
    block["tag"] = to_string(cert.tag);
    os << "  tag " << to_string(cert.tag);
    if (cert.tag == CertificateTag::trivial_fiber) {
      block["x0"] = point_label(*cert.x0);
      block["fiber_boxes"] = cert.fiber;
      os << ", x0 = " << point_label(*cert.x0) << "\n";
    } else {
      block["n0"] = cert.n0;
      os << ", n0 = " << cert.n0 << "\n";
      Json images = Json::array();
      for (std::size_t c = 0; c < cert.cells.size(); ++c) {
        images.push_back({{"cell", cell_label(cert.cells[c])}, {"image", set_label(cert.images[c])}});
        os << "    cell " << cell_label(cert.cells[c]) << ": F^" << cert.n0 << " = " << set_label(cert.images[c])
           << "\n";
      }
      block["images"] = images;
    }
    if (!cert.common_points.empty()) {
      Json points = Json::array();
      for (const auto& cp : cert.common_points) {
        points.push_back({{"a", cp.a}, {"b", cp.b}, {"point", point_label(cp.point)}});
        os << "    cells " << cp.a << " and " << cp.b << " share " << point_label(cp.point) << "\n";
      }
      block["common_points"] = points;
    }
    if (cert.eps) {
      block["eps"] = cert.eps->to_string();
      block["window_end"] = cert.window_end;
      Json bounds = Json::array();
      for (const auto& b : cert.bounds) {
        bounds.push_back({{"a", b.a}, {"b", b.b}, {"worst", b.worst.to_string()}});
        os << "    cells " << b.a << " and " << b.b << ": max H_d " << b.worst << " over exponents " << cert.n0
           << ".." << cert.window_end << "\n";
      }
      block["bounds"] = bounds;
    }
    block["rechecked"] = recheck(f, cert);
    os << "  recheck: " << (recheck(f, cert) ? "ok" : "FAILED") << "\n";
    return "certificate";
  }

  template <ClosedRelation R>
  std::string refute(const R& f, const Command& cmd, Json& block, std::ostream& os) {
    using P = typename R::point_type;
    RefutationSearch<R> result = Refutation<R>{};
    if (is_initial(cmd.property)) {
      InitialTemplate<P> t;
      for (const auto& seg : cmd.initial.segments) t.segments.push_back({to_point<R>(seg.base), seg.length});
      result = refute_property(f, cmd.property, cmd.eps, t, cmd.range);
    } else {
      SpacedTemplate<P> t{cmd.spaced.first_k, {}};
      for (const auto& seg : cmd.spaced.segments) t.segments.push_back({to_point<R>(seg.base), seg.length});
      result = refute_property(f, cmd.property, cmd.eps, t, cmd.range);
    }
    const char* parameter = is_initial(cmd.property) ? "m" : "N";
    block["property"] = to_string(cmd.property);
    block["mode"] = to_string(mode_of(cmd.property));
    block["eps"] = cmd.eps.to_string();
    if (const auto* inc = std::get_if<Inconclusive<R>>(&result)) {
      block["parameter"] = inc->parameter;
      block["witness"] = witness_json(inc->witness);
      os << "  " << parameter << " = " << inc->parameter << " admits tracer y = " << point_label(inc->witness.y)
         << "\n";
      write_entries(os, inc->witness.report);
      return "inconclusive";
    }
    const auto& ref = std::get<Refutation<R>>(result);
    Json instances = Json::array();
    for (const auto& inst : ref.instances) {
      os << "  " << parameter << " = " << inst.parameter << "\n";
      write_failures(os, inst.failures);
      instances.push_back({{"parameter", inst.parameter}, {"gaps", inst.gaps}, {"cells", failures_json(inst.failures)}});
    }
    block["instances"] = instances;
    block["rechecked"] = recheck(f, ref);
    os << "  replay: " << (recheck(f, ref) ? "ok" : "FAILED") << "\n";
    return "refutation";
  }

  std::string mahavier(const FiniteRelation& f, const Command& cmd, Json& block, std::ostream& os) {
    switch (cmd.kind) {
      case Command::Kind::words: {
        const auto words = admissible_words(f, cmd.length);
        block["length"] = cmd.length;
        block["count"] = words.size();
        Json list = Json::array();
        for (const auto& w : words) list.push_back(w);
        block["words"] = list;
        os << "  " << words.size() << " admissible words of length " << cmd.length << "\n";
        return "pass";
      }
      case Command::Kind::mixing: {
        const auto index = mixing_index(TransitionMatrix::of(f), cmd.t_max);
        block["mixing_index"] = index ? Json(*index) : Json(nullptr);
        if (index) {
          os << "  mixing index " << *index << "\n";
        } else {
          os << "  no positive power up to " << cmd.t_max << "\n";
        }
        return index ? "pass" : "fail";
      }
      case Command::Kind::mahavier_trace: {
        const MahavierSystem sys(f);
        std::vector<MahavierSegment> spec;
        for (const auto& seg : cmd.mahavier_segments) spec.push_back({seg.base, seg.k, seg.l});
        block["system"] = sys.powered_by();
        os << "  " << sys.powered_by() << "\n";
        std::optional<EPSequence> y = cmd.mahavier_y;
        if (!y) {
          y = surgery_tracer(sys, spec, cmd.eps);
          if (!y) {
            block["tracer"] = nullptr;
            os << "  word surgery could not bridge the gaps\n";
            return "fail";
          }
          os << "  tracer built by word surgery: " << y->to_string() << "\n";
        } else {
          os << "  tracer " << y->to_string() << "\n";
        }
        block["tracer"] = y->to_string();
        const auto r = mahavier_trace_check(sys, spec, *y, cmd.eps);
        block["report"] = report_json(r);
        write_entries(os, r);
        return r.passed ? "pass" : "fail";
      }
      default:
        break;
    }
    throw InvalidArgument("unsupported command");
  }

  std::string suite(const Command& cmd, Json& block, std::ostream& os) {
    std::vector<PropertyVerdict> verdicts;
    const auto& name = cmd.suite;
    const bool all = name == "all";
    if (all || name == "implications") verdicts = implication_suite(seed_, cmd.count);
    if (name == "hausdorff-implies-plain") verdicts.push_back(hausdorff_implies_plain(seed_, cmd.count));
    if (name == "initial-round-trip") verdicts.push_back(initial_round_trip(seed_, cmd.count));
    if (name == "conjugacy-invariance") verdicts.push_back(conjugacy_invariance(seed_, cmd.count));
    if (name == "function-agreement") verdicts.push_back(function_agreement(seed_, cmd.count));
    if (all || name == "metric") verdicts.push_back(metric_suite(seed_, cmd.count));
    if (all || name == "automaton-periodicity") verdicts.push_back(automaton_periodicity_suite(seed_, cmd.count));
    Json list = Json::array();
    bool ok = true;
    for (const auto& v : verdicts) {
      Json failures = Json::array();
      for (const auto& fl : v.failures) {
        failures.push_back({{"instance", fl.instance}, {"seed", fl.seed}, {"detail", fl.detail}});
      }
      list.push_back({{"implication", v.implication}, {"instances", v.instances}, {"failures", failures}});
      os << "  " << v.implication << ": " << v.instances << " instances, " << v.failures.size() << " failures\n";
      for (const auto& fl : v.failures) {
        os << "    instance " << fl.instance << " (seed " << fl.seed << "): " << fl.detail << "\n";
      }
      ok = ok && v.passed();
    }
    block["verdicts"] = list;
    return ok ? "pass" : "fail";
  }

  template <ClosedRelation R>
  Specification<R> spaced_spec(const R& f, const SpecDecl& d) {
    std::vector<SegmentRequest<typename R::point_type>> requests;
    for (const auto& seg : d.segments) requests.push_back({to_point<R>(seg.base), seg.k, seg.l});
    return Specification<R>::build(f, requests);
  }

  template <ClosedRelation R>
  InitialSpecification<R> initial_spec(const R& f, const SpecDecl& d) {
    std::vector<std::pair<typename R::point_type, std::size_t>> bases;
    for (const auto& seg : d.segments) bases.emplace_back(to_point<R>(seg.base), seg.l);
    return InitialSpecification<R>::build(f, bases, d.gaps);
  }

  const Scenario& s_;
  std::uint64_t seed_;
};

}  // namespace

Report run(const Scenario& scenario, std::uint64_t seed) {
  Report out;
  std::ostringstream os;
  Json doc;
  doc["seed"] = seed;
  if (scenario.ambient == Scenario::Ambient::interval) {
    doc["ambient"] = "interval " + scenario.interval->to_string();
    doc["boxes"] = scenario.boxes.size();
  } else {
    doc["ambient"] = "finite " + std::to_string(scenario.points);
  }
  os << "seed " << seed << "\n";
  os << "ambient " << doc["ambient"].get<std::string>() << "\n";

  Runner runner(scenario, seed);
  Json commands = Json::array();
  for (const auto& cmd : scenario.commands) {
    Json block;
    block["line"] = cmd.line;
    block["command"] = cmd.source;
    std::ostringstream details;
    std::string outcome;
    try {
      if (scenario.box_relation) {
        outcome = runner.execute(*scenario.box_relation, cmd, block, details);
      } else {
        outcome = runner.execute(*scenario.finite_relation, cmd, block, details);
      }
    } catch (const Error& e) {
      outcome = "error";
      block["error"] = std::string("line ") + std::to_string(cmd.line) + ": " + e.what();
      details << "  error: " << e.what() << "\n";
    }
    const bool met = !cmd.expect || *cmd.expect == outcome;
    out.all_met = out.all_met && met && outcome != "error";
    block["outcome"] = outcome;
    if (cmd.expect) {
      block["expect"] = *cmd.expect;
      block["met"] = met;
    }
    os << "\n== line " << cmd.line << ": " << cmd.source << "\n";
    os << "outcome: " << outcome << "\n" << details.str();
    if (cmd.expect) os << "expect " << *cmd.expect << ": " << (met ? "met" : "NOT MET") << "\n";
    commands.push_back(std::move(block));
  }
  doc["commands"] = commands;
  doc["all_met"] = out.all_met;
  os << "\n" << (out.all_met ? "all expectations met" : "some expectations not met") << "\n";
  out.text = os.str();
  out.json = doc.dump(2) + "\n";
  return out;
}

}  // namespace crdyn::cli
