#include "opn/report.hpp"

#include "opn/errors.hpp"

#include <algorithm>
#include <sstream>

namespace opn {

namespace {

Json tuple_json(const Tuple& t) {
    Json arr = Json::array();
    for (const auto& v : t) {
        arr.push_back(to_string(v));
    }
    return arr;
}

Json factors_json(const FactoredInteger& f) {
    Json arr = Json::array();
    for (const auto& pp : f.factors()) {
        arr.push_back({{"prime", to_string(pp.prime)}, {"exponent", pp.exponent}});
    }
    return arr;
}

Json rational_map(const std::map<std::string, Rational>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) {
        out[k] = to_string(v);
    }
    return out;
}

// Right-aligned columns separated by two spaces.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                  const std::string& indent = "  ") {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) {
        width[i] = header[i].size();
        for (const auto& r : rows) {
            width[i] = std::max(width[i], r[i].size());
        }
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        os << indent;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) {
                os << "  ";
            }
            os << std::string(width[i] - cells[i].size(), ' ') << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
    return os.str();
}

std::vector<std::string> strings(const Json& arr) {
    std::vector<std::string> out;
    for (const auto& v : arr) {
        out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
    return out;
}

std::string factors_text(const Json& factors) {
    if (factors.empty()) {
        return "1";
    }
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) {
            out += " * ";
        }
        out += f.at("prime").get<std::string>();
        if (f.at("exponent").get<unsigned>() > 1) {
            out += "^" + std::to_string(f.at("exponent").get<unsigned>());
        }
    }
    return out;
}

std::string render_search(const Json& j) {
    std::ostringstream os;
    if (!j.at("lemma").get<std::string>().empty()) {
        os << "lemma " << j.at("lemma").get<std::string>() << ", bound " << j.at("bound").get<std::uint64_t>()
           << '\n';
    }
    const auto& cex = j.at("counterexamples");
    os << (cex.empty() ? "PASS" : "FAIL") << " (" << j.at("tuples_examined").get<std::uint64_t>() << " tuples)\n";
    os << cex.size() << " counterexamples\n";
    if (!cex.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& t : cex) {
            rows.push_back(strings(t));
        }
        os << table(strings(j.at("fields")), rows);
    }
    const auto& wit = j.at("witnesses");
    const auto found = j.at("witnesses_found").get<std::uint64_t>();
    if (found > 0) {
        os << found << " witnesses";
        if (wit.size() < found) {
            os << ", first " << wit.size() << " shown";
        }
        os << '\n';
        std::vector<std::vector<std::string>> rows;
        for (const auto& t : wit) {
            rows.push_back(strings(t));
        }
        if (!rows.empty()) {
            os << table(strings(j.at("witness_fields")), rows);
        }
    }
    for (const auto& n : j.at("notes")) {
        os << "note: " << n.get<std::string>() << '\n';
    }
    return os.str();
}

std::string render_fiber(const Json& f) {
    std::ostringstream os;
    os << "shared prime " << f.at("shared_prime").get<std::string>() << " (" << f.at("pattern").get<std::string>()
       << ", " << f.at("members").size() << " members)\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& m : f.at("members")) {
        rows.push_back({m.at("p").get<std::string>(), m.at("class").get<std::string>(),
                        m.at("exceptional").get<bool>() ? "yes" : "no"});
    }
    os << table({"p", "class", "exceptional"}, rows);
    return os.str();
}

std::string render_classify(const Json& j) {
    std::ostringstream os;
    os << "p = " << j.at("p").get<std::string>() << '\n';
    os << "sigma(p^2) = " << j.at("sigma").get<std::string>() << " = " << factors_text(j.at("factors")) << '\n';
    os << "m = " << j.at("m").get<unsigned>() << ", j = " << j.at("j").get<unsigned>() << '\n';
    os << "class " << (j.at("class").is_null() ? "-" : j.at("class").get<std::string>()) << '\n';
    return os.str();
}

std::string render_link(const Json& j) {
    std::ostringstream os;
    os << "p = " << j.at("p").get<std::string>() << ", class " << j.at("class").get<std::string>() << '\n';
    os << "linked prime " << j.at("ell").get<std::string>();
    if (j.at("exceptional").get<bool>()) {
        os << " (exceptional; partners";
        for (const auto& b : j.at("partners")) {
            os << ' ' << b.get<std::string>();
        }
        os << ')';
    }
    os << '\n';
    return os.str();
}

std::string render_lp(const Json& j) {
    std::ostringstream os;
    const Json& r = j.at("result");
    os << "variant " << j.at("variant").get<std::string>() << '\n';
    os << render_bound(parse_rational(r.at("a").get<std::string>()), parse_rational(r.at("b").get<std::string>()))
       << '\n';
    os << "a = " << r.at("a").get<std::string>() << ", b = " << r.at("b").get<std::string>() << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto& [id, c] : j.at("multipliers").items()) {
        rows.push_back({id, c.get<std::string>()});
    }
    // Numeric relation order: 5.2 before 5.10.
    std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
        return std::stod(x[0].substr(2)) < std::stod(y[0].substr(2));
    });
    os << "multipliers\n" << table({"relation", "c"}, rows);
    rows.clear();
    for (std::string_view sym : kSymbols) {
        if (r.at("residual").contains(std::string(sym))) {
            rows.push_back({std::string(sym), r.at("residual").at(std::string(sym)).get<std::string>()});
        }
    }
    os << "residual\n" << table({"symbol", "coefficient"}, rows);
    return os.str();
}

std::string relation_text(const Json& r) {
    std::string out;
    for (std::string_view sym : kSymbols) {
        const std::string key(sym);
        if (!r.at("terms").contains(key)) {
            continue;
        }
        Rational c = parse_rational(r.at("terms").at(key).get<std::string>());
        const bool neg = c < 0;
        if (neg) {
            c = -c;
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (c != 1) {
            out += to_string(c) + "*";
        }
        out += key;
    }
    Rational k = parse_rational(r.at("constant").get<std::string>());
    if (k != 0) {
        out += k < 0 ? " - " + to_string(Rational(-k)) : " + " + to_string(k);
    }
    out += r.at("kind").get<std::string>() == "EQ" ? " = 0" : " <= 0";
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

Json to_json(const SearchReport& report) {
    Json j;
    j["kind"] = "search";
    j["lemma"] = report.lemma_id;
    j["bound"] = report.bound;
    j["fields"] = report.fields;
    j["witness_fields"] = report.witness_fields;
    j["tuples_examined"] = report.tuples_examined;
    j["witnesses_found"] = report.witnesses_found;
    j["counterexamples"] = Json::array();
    for (const auto& t : report.counterexamples) {
        j["counterexamples"].push_back(tuple_json(t));
    }
    j["witnesses"] = Json::array();
    for (const auto& t : report.witnesses) {
        j["witnesses"].push_back(tuple_json(t));
    }
    j["notes"] = report.notes;
    j["elapsed_ms"] = report.elapsed.count();
    j["passed"] = report.passed();
    return j;
}

Json to_json(const ContributionProfile& profile) {
    Json j;
    j["kind"] = "classify";
    j["p"] = to_string(profile.p);
    j["e"] = profile.e;
    j["sigma"] = to_string(profile.sigma);
    j["factors"] = factors_json(profile.contributed);
    j["m"] = profile.m;
    j["j"] = profile.j;
    j["class"] = profile.class_tag ? Json(std::string(to_string(*profile.class_tag))) : Json(nullptr);
    return j;
}

Json link_json(const ContributionProfile& profile, const LinkedPrime& link) {
    Json j;
    j["kind"] = "link";
    j["p"] = to_string(profile.p);
    j["class"] = std::string(to_string(profile.class_tag.value()));
    j["ell"] = to_string(link.ell);
    j["exceptional"] = link.exceptional;
    j["partners"] = Json::array();
    for (const auto& b : link.partners) {
        j["partners"].push_back(to_string(b));
    }
    return j;
}

Json to_json(const FiberReport& fiber) {
    Json j;
    j["shared_prime"] = to_string(fiber.shared_prime);
    j["pattern"] = fiber.pattern;
    j["members"] = Json::array();
    for (const auto& m : fiber.members) {
        j["members"].push_back(
            {{"p", to_string(m.p)}, {"class", std::string(to_string(m.cls))}, {"exceptional", m.exceptional}});
    }
    return j;
}

Json collisions_json(ClassTag cls, std::uint64_t min_share, std::uint64_t bound, const std::vector<FiberReport>& fibers) {
    Json j;
    j["kind"] = "collisions";
    j["class"] = std::string(to_string(cls));
    j["min_share"] = min_share;
    j["bound"] = bound;
    j["fibers"] = Json::array();
    for (const auto& f : fibers) {
        j["fibers"].push_back(to_json(f));
    }
    return j;
}

Json to_json(const PropositionCheck& check) {
    return {{"kind", "cyclo"},
            {"t", check.t},
            {"r", check.r},
            {"hypothesis_holds", check.hypothesis_holds},
            {"divides", check.divides},
            {"composed_degree", check.composed_degree}};
}

Json reconstruct_json(const BigInt& d, const std::optional<ReconstructedTriple>& triple) {
    Json j{{"kind", "reconstruct"}, {"d", to_string(d)}, {"found", triple.has_value()}};
    if (triple) {
        j["a"] = to_string(triple->a);
        j["b"] = to_string(triple->b);
        j["c"] = to_string(triple->c);
    }
    return j;
}

Json to_json(const Certificate& cert) {
    return {{"variant", std::string(to_string(cert.variant))}, {"multipliers", rational_map(cert.multipliers)}};
}

Json to_json(const BoundResult& result) {
    return {{"a", to_string(result.a)}, {"b", to_string(result.b)}, {"residual", rational_map(result.residual)}};
}

Json to_json(const ConstraintSystem& system) {
    Json j;
    j["kind"] = "lp-system";
    j["variant"] = std::string(to_string(system.variant()));
    j["symbols"] = Json::array();
    for (std::string_view s : kSymbols) {
        j["symbols"].push_back(std::string(s));
    }
    j["relations"] = Json::array();
    for (const auto& r : system.relations()) {
        j["relations"].push_back({{"id", r.id},
                                  {"kind", std::string(to_string(r.kind))},
                                  {"terms", rational_map(r.terms)},
                                  {"constant", to_string(r.constant)}});
    }
    return j;
}

Json solve_json(const Optimum& optimum) {
    Json j = to_json(optimum.certificate);
    j["kind"] = "lp";
    j["result"] = to_json(optimum.result);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    try {
        Certificate cert;
        cert.variant = parse_variant(j.at("variant").get<std::string>());
        for (const auto& [id, v] : j.at("multipliers").items()) {
            if (v.is_string()) {
                cert.multipliers[id] = parse_rational(v.get<std::string>());
            } else if (v.is_number_integer()) {
                cert.multipliers[id] = Rational(BigInt(std::to_string(v.get<long long>())));
            } else {
                throw InvalidInput("multiplier of " + id + " must be a \"p/q\" string or an integer");
            }
        }
        return cert;
    } catch (const Json::exception& e) {
        throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
}

std::string render_bound(const Rational& a, const Rational& b) {
    std::string out;
    if (a != 0) {
        out = (a == 1 ? "" : to_string(a) + "·") + "ω";
    }
    if (b != 0) {
        if (out.empty()) {
            out = to_string(b);
        } else {
            out += b < 0 ? " − " + to_string(Rational(-b)) : " + " + to_string(b);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " ≤ Ω";
}

std::string render(const Json& j) {
    const std::string kind = j.value("kind", "");
    if (kind == "search") {
        return render_search(j);
    }
    if (kind == "classify") {
        return render_classify(j);
    }
    if (kind == "link") {
        return render_link(j);
    }
    if (kind == "fiber" || j.contains("shared_prime")) {
        return render_fiber(j);
    }
    if (kind == "collisions") {
        std::ostringstream os;
        os << j.at("fibers").size() << " fibers of " << j.at("class").get<std::string>() << " primes up to "
           << j.at("bound").get<std::uint64_t>() << " sharing their largest prime (at least "
           << j.at("min_share").get<std::uint64_t>() << " members)\n";
        for (const auto& f : j.at("fibers")) {
            os << render_fiber(f);
        }
        return os.str();
    }
    if (kind == "cyclo") {
        std::ostringstream os;
        const auto t = j.at("t").get<unsigned>();
        os << "t = " << t << ", r = " << j.at("r").get<unsigned>() << '\n';
        os << "r = -1 (mod " << 2 * t << "): " << (j.at("hypothesis_holds").get<bool>() ? "yes" : "no") << '\n';
        os << "Phi_" << 2 * t << " divides Phi_" << t << "(Psi_" << j.at("r").get<unsigned>()
           << "): " << (j.at("divides").get<bool>() ? "yes" : "no") << '\n';
        return os.str();
    }
    if (kind == "reconstruct") {
        if (!j.at("found").get<bool>()) {
            return "d = " + j.at("d").get<std::string>() + ": no triple\n";
        }
        return "d = " + j.at("d").get<std::string>() + ": a = " + j.at("a").get<std::string>() +
               ", b = " + j.at("b").get<std::string>() + ", c = " + j.at("c").get<std::string>() + '\n';
    }
    if (kind == "lp") {
        return render_lp(j);
    }
    if (kind == "lp-check") {
        if (!j.at("valid").get<bool>()) {
            return "INVALID: " + j.at("error").get<std::string>() + '\n';
        }
        const Json& r = j.at("result");
        return "VALID: " +
               render_bound(parse_rational(r.at("a").get<std::string>()), parse_rational(r.at("b").get<std::string>())) +
               '\n';
    }
    if (kind == "lp-system") {
        std::ostringstream os;
        os << "variant " << j.at("variant").get<std::string>() << ", " << j.at("relations").size() << " relations\n";
        for (const auto& r : j.at("relations")) {
            os << "  (" << r.at("id").get<std::string>() << ") " << relation_text(r) << '\n';
        }
        return os.str();
    }
    return j.dump(2) + '\n';
}

} // namespace opn
