#include "minvar/certificate.hpp"

#include <json.hpp>

#include "minvar/errors.hpp"

namespace minvar {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Proved:
      return "proved";
    case Verdict::Refuted:
      return "refuted";
    case Verdict::ResourcesExceeded:
      return "resources_exceeded";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "proved") return Verdict::Proved;
  if (s == "refuted") return Verdict::Refuted;
  if (s == "resources_exceeded") return Verdict::ResourcesExceeded;
  throw ParseError("unknown verdict '" + s + "'");
}

int VerificationCertificate::exit_code() const {
  switch (verdict) {
    case Verdict::Proved:
      return 0;
    case Verdict::Refuted:
      return 1;
    case Verdict::ResourcesExceeded:
      return 3;
  }
  return 2;
}

std::string VerificationCertificate::to_json() const {
  json spec = {{"s", s}, {"t", t}, {"ident", ident}, {"field", field}, {"order", order}};
  json cont = json::array();
  for (const auto& c : containment) cont.push_back({{"poly", c.poly}, {"member", c.member}});
  json rad = json::array();
  for (const auto& r : radical)
    rad.push_back({{"gen", r.gen},
                   {"in_radical", r.in_radical},
                   {"reductions", r.reductions},
                   {"gb_size", r.gb_size}});
  json j = {{"spec", spec},     {"set", set_label}, {"containment", cont},
            {"radical", rad},   {"verdict", to_string(verdict)}, {"ms", ms}};
  if (verdict == Verdict::Refuted) j["witness"] = witness;
  return j.dump(2);
}

VerificationCertificate VerificationCertificate::from_json(const std::string& text) {
  json j = json::parse(text);
  VerificationCertificate c;
  c.s = j.at("spec").at("s").get<int>();
  c.t = j.at("spec").at("t").get<int>();
  c.ident = j.at("spec").at("ident").get<std::string>();
  c.field = j.at("spec").at("field").get<std::string>();
  c.order = j.at("spec").at("order").get<std::string>();
  c.set_label = j.at("set").get<std::string>();
  for (const auto& e : j.at("containment"))
    c.containment.push_back({e.at("poly").get<std::string>(), e.at("member").get<bool>()});
  for (const auto& e : j.at("radical"))
    c.radical.push_back({e.at("gen").get<std::string>(), e.at("in_radical").get<bool>(),
                         e.at("reductions").get<std::uint64_t>(),
                         e.at("gb_size").get<std::uint64_t>()});
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  if (j.contains("witness")) c.witness = j.at("witness").get<std::string>();
  c.ms = j.at("ms").get<std::int64_t>();
  return c;
}

}  // namespace minvar
