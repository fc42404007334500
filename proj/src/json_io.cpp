#include "wavefront/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace wf {

namespace {

using nlohmann::json;

json parse(const std::string& s)
{
    json j = json::parse(s, nullptr, false);
    WF_REQUIRE(!j.is_discarded(), errc::parse_error, "invalid JSON: " + s);
    return j;
}

Partition partition_from(const json& j)
{
    WF_REQUIRE(j.is_array(), errc::parse_error, "partition must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        WF_REQUIRE(v.is_number_integer(), errc::parse_error,
                   "partition entries must be integers");
        int x = v.get<int>();
        WF_REQUIRE(x >= 0, errc::not_a_partition,
                   "partition entries must be nonnegative");
        parts.push_back(x);
    }
    for (size_t i = 1; i < parts.size(); ++i)
        WF_REQUIRE(parts[i - 1] >= parts[i], errc::not_a_partition,
                   "partition must be weakly decreasing");
    return canon(parts);
}

json partition_to(const Partition& p)
{
    return json(p);
}

int sign_from(const json& v)
{
    WF_REQUIRE(v.is_number_integer(), errc::parse_error,
               "signs must be integers");
    int s = v.get<int>();
    WF_REQUIRE(s == 1 || s == -1, errc::parse_error, "signs must be +-1");
    return s;
}

EpsMap eps_positional(const Partition& lam, const json& arr,
                      const char* what)
{
    std::vector<int> jj = jord(lam);
    WF_REQUIRE(arr.is_array() && arr.size() == jj.size(), errc::parse_error,
               std::string(what) +
                   " must list one sign per distinct part, descending");
    EpsMap eps;
    for (size_t i = 0; i < jj.size(); ++i)
        eps[jj[i]] = sign_from(arr[i]);
    return eps;
}

json eps_positional_to(const Partition& lam, const EpsMap& eps)
{
    json arr = json::array();
    for (int i : jord(lam))
        arr.push_back(eps.at(i));
    return arr;
}

} // namespace

Partition parse_partition(const std::string& s)
{
    return partition_from(parse(s));
}

std::string partition_json(const Partition& p)
{
    return partition_to(p).dump();
}

PClass parse_class(const std::string& s)
{
    if (s == "symp")
        return PClass::symp;
    if (s == "orth_odd")
        return PClass::orth_odd;
    if (s == "orth_even")
        return PClass::orth_even;
    fail(errc::parse_error,
         "unknown class (expected symp, orth_odd or orth_even): " + s);
}

std::string class_name(PClass c)
{
    switch (c) {
    case PClass::symp:
        return "symp";
    case PClass::orth_odd:
        return "orth_odd";
    case PClass::orth_even:
        return "orth_even";
    }
    return "?";
}

SignedPartition parse_signed_partition(const std::string& s)
{
    json j = parse(s);
    WF_REQUIRE(j.is_object() && j.contains("lambda") && j.contains("class") &&
                   j.contains("eps"),
               errc::parse_error,
               "signed partition needs lambda, class and eps");
    SignedPartition sp;
    sp.lam = partition_from(j["lambda"]);
    sp.cls = parse_class(j["class"].get<std::string>());
    WF_REQUIRE(j["eps"].is_object(), errc::parse_error,
               "eps must map parts to signs");
    for (const auto& [key, val] : j["eps"].items())
        sp.eps[std::stoi(key)] = sign_from(val);
    check_signed(sp);
    return sp;
}

std::string signed_partition_json(const SignedPartition& sp)
{
    json e = json::object();
    for (const auto& [i, v] : sp.eps)
        e[std::to_string(i)] = v;
    return json{{"lambda", partition_to(sp.lam)},
                {"class", class_name(sp.cls)},
                {"eps", e}}
        .dump();
}

Symbol parse_symbol(const std::string& s)
{
    json j = parse(s);
    WF_REQUIRE(j.is_object() && j.contains("X") && j.contains("Y") &&
                   j.contains("kind"),
               errc::parse_error, "symbol needs X, Y and kind");
    Symbol sym;
    for (const auto& v : j["X"])
        sym.X.push_back(v.get<int>());
    for (const auto& v : j["Y"])
        sym.Y.push_back(v.get<int>());
    std::string kind = j["kind"].get<std::string>();
    WF_REQUIRE(kind == "imp" || kind == "pair", errc::parse_error,
               "symbol kind must be imp or pair");
    sym.kind = kind == "imp" ? SymKind::imp : SymKind::pair;
    std::sort(sym.X.rbegin(), sym.X.rend());
    std::sort(sym.Y.rbegin(), sym.Y.rend());
    return sym;
}

std::string symbol_json(const Symbol& s)
{
    return json{{"X", s.X},
                {"Y", s.Y},
                {"kind", s.kind == SymKind::imp ? "imp" : "pair"}}
        .dump();
}

Quad parse_quad(const std::string& s)
{
    json j = parse(s);
    WF_REQUIRE(j.is_object() && j.contains("lp") && j.contains("ep") &&
                   j.contains("lm") && j.contains("em"),
               errc::parse_error, "quadruple needs lp, ep, lm, em");
    Quad q;
    q.lp = partition_from(j["lp"]);
    q.lm = partition_from(j["lm"]);
    q.ep = eps_positional(q.lp, j["ep"], "ep");
    q.em = eps_positional(q.lm, j["em"], "em");
    return q;
}

std::string quad_json(const Quad& q)
{
    return json{{"lp", partition_to(q.lp)},
                {"ep", eps_positional_to(q.lp, q.ep)},
                {"lm", partition_to(q.lm)},
                {"em", eps_positional_to(q.lm, q.em)}}
        .dump();
}

std::string springer_datum_json(const SpringerDatum& d)
{
    return json{{"k", d.k},
                {"rho", json::array({partition_to(d.rho.first),
                                     partition_to(d.rho.second)})}}
        .dump();
}

std::string induction_json(const InductionData& ind)
{
    json intervals = json::array();
    for (const RelInterval& ri : ind.rel) {
        json iv{{"D", ri.D},
                {"chi", ind.chi.at(ri.D)},
                {"point", ri.is_point}};
        if (!ri.is_point && ri.d)
            iv["side"] = ri.d;
        intervals.push_back(iv);
    }
    return json{{"lambda", partition_to(ind.lam)},
                {"regular", is_regular(ind)},
                {"xi", ind.xi},
                {"Jp", std::vector<int>(ind.Jp.begin(), ind.Jp.end())},
                {"Jm", std::vector<int>(ind.Jm.begin(), ind.Jm.end())},
                {"intervals", intervals}}
        .dump();
}

std::string suite_report_json(const SuiteReport& rep)
{
    return json{{"suite", rep.suite},
                {"instances", rep.instances},
                {"failures", rep.failures},
                {"millis", rep.millis},
                {"passed", rep.passed()}}
        .dump();
}

} // namespace wf
