#include "jobspec.hpp"

#include <set>

namespace cli {

LibraryError::LibraryError(cyclo_status status, const std::string& where)
    : std::runtime_error(where + ": " + cyclo_status_name(status) + ": " + cyclo_last_error()),
      status_(status) {}

void check(cyclo_status s, const std::string& where) {
  if (s != CYCLO_OK) throw LibraryError(s, where);
}

void WordBuffer::assign(const std::vector<Word>& ws) {
  letters.clear();
  words.clear();
  for (const auto& w : ws) {
    auto& row = letters.emplace_back();
    for (const auto& [symbol, exponent] : w) row.push_back({symbol.c_str(), exponent});
  }
  for (const auto& row : letters) words.push_back({row.data(), row.size()});
}

namespace {

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t i) { return at + "/" + std::to_string(i); }

const json& field(const json& obj, const std::string& at, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(at, "missing required field \"" + key + "\"");
  return *it;
}

void only_fields(const json& obj, const std::string& at, std::set<std::string> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.contains(it.key()))
      throw InputError(child(at, it.key()), "unexpected field");
}

std::uint64_t unsigned_field(const json& v, const std::string& at) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw InputError(at, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

// Runs a group constructor, mapping failure to a diagnostic at `at`.
template <class F>
GroupPtr build(F&& make, const std::string& at) {
  cyclo_group* g = nullptr;
  const cyclo_status s = make(&g);
  if (s != CYCLO_OK) throw InputError(at, std::string(cyclo_status_name(s)) + ": " + cyclo_last_error());
  return GroupPtr(g);
}

GroupPtr parse_group(const json& doc, const std::string& at);

GroupPtr parse_product(const json& doc, const std::string& at, bool direct) {
  only_fields(doc, at, {"kind", "factors"});
  const auto& fs = field(doc, at, "factors");
  const std::string fat = child(at, "factors");
  if (!fs.is_array() || fs.empty()) throw InputError(fat, "expected a non-empty array of groups");
  std::vector<GroupPtr> owned;
  std::vector<const cyclo_group*> raw;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    owned.push_back(parse_group(fs[i], child(fat, i)));
    raw.push_back(owned.back().get());
  }
  return build(
      [&](cyclo_group** g) {
        return direct ? cyclo_group_direct_product(raw.data(), raw.size(), g)
                      : cyclo_group_free_product(raw.data(), raw.size(), g);
      },
      at);
}

GroupPtr parse_table(const json& doc, const std::string& at) {
  only_fields(doc, at, {"kind", "elements", "table", "generators"});
  const auto& elements = field(doc, at, "elements");
  const std::string eat = child(at, "elements");
  if (!elements.is_array() || elements.empty())
    throw InputError(eat, "expected a non-empty array of element names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!elements[i].is_string()) throw InputError(child(eat, i), "expected a string");
    names.push_back(elements[i].get<std::string>());
  }
  const std::size_t size = names.size();
  auto index_of = [&](const json& v, const std::string& where) -> std::uint32_t {
    if (v.is_string()) {
      for (std::size_t k = 0; k < size; ++k)
        if (names[k] == v.get<std::string>()) return static_cast<std::uint32_t>(k);
      throw InputError(where, "unknown element \"" + v.get<std::string>() + "\"");
    }
    const auto k = unsigned_field(v, where);
    if (k >= size) throw InputError(where, "element index out of range");
    return static_cast<std::uint32_t>(k);
  };

  const auto& rows = field(doc, at, "table");
  const std::string tat = child(at, "table");
  if (!rows.is_array() || rows.size() != size)
    throw InputError(tat, "expected " + std::to_string(size) + " rows");
  std::vector<std::uint32_t> flat;
  for (std::size_t a = 0; a < size; ++a) {
    const std::string rat = child(tat, a);
    if (!rows[a].is_array() || rows[a].size() != size)
      throw InputError(rat, "expected " + std::to_string(size) + " entries");
    for (std::size_t b = 0; b < size; ++b) flat.push_back(index_of(rows[a][b], child(rat, b)));
  }

  const auto& gens = field(doc, at, "generators");
  const std::string gat = child(at, "generators");
  if (!gens.is_array()) throw InputError(gat, "expected an array of elements");
  std::vector<std::uint32_t> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) generators.push_back(index_of(gens[i], child(gat, i)));

  std::vector<const char*> cnames;
  for (const auto& n : names) cnames.push_back(n.c_str());
  return build(
      [&](cyclo_group** g) {
        return cyclo_group_table(size, cnames.data(), flat.data(), generators.data(),
                                 generators.size(), g);
      },
      at);
}

GroupPtr parse_group(const json& doc, const std::string& at) {
  if (!doc.is_object()) throw InputError(at, "expected a group object");
  const auto& kind = field(doc, at, "kind");
  if (!kind.is_string()) throw InputError(child(at, "kind"), "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "cyclic") {
    only_fields(doc, at, {"kind", "order"});
    const auto order = unsigned_field(field(doc, at, "order"), child(at, "order"));
    return build([&](cyclo_group** g) { return cyclo_group_cyclic(order, g); }, child(at, "order"));
  }
  if (k == "free") {
    only_fields(doc, at, {"kind", "rank"});
    const auto rank = unsigned_field(field(doc, at, "rank"), child(at, "rank"));
    if (rank > 64) throw InputError(child(at, "rank"), "rank above 64 is not supported");
    return build([&](cyclo_group** g) { return cyclo_group_free(static_cast<std::uint32_t>(rank), g); },
                 child(at, "rank"));
  }
  if (k == "finite_table") return parse_table(doc, at);
  if (k == "direct_product") return parse_product(doc, at, true);
  if (k == "free_product") return parse_product(doc, at, false);
  throw InputError(child(at, "kind"), "unknown group kind \"" + k + "\"");
}

Word parse_word(const json& doc, const std::string& at) {
  if (!doc.is_array()) throw InputError(at, "expected an array of [symbol, exponent] pairs");
  Word w;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& l = doc[i];
    const std::string lat = child(at, i);
    if (!l.is_array() || l.size() != 2 || !l[0].is_string() || !l[1].is_number_integer())
      throw InputError(lat, "expected [symbol, exponent]");
    const auto e = l[1].get<std::int64_t>();
    if (e == 0 || e > 1'000'000 || e < -1'000'000)
      throw InputError(child(lat, 1), "exponent must be non-zero and at most 10^6 in size");
    w.emplace_back(l[0].get<std::string>(), static_cast<int>(e));
  }
  return w;
}

MarkedPtr parse_marking(const json* doc, const cyclo_group* g) {
  cyclo_marked* m = nullptr;
  if (!doc || (doc->is_string() && doc->get<std::string>() == "default")) {
    const auto s = cyclo_marked_default(g, &m);
    if (s != CYCLO_OK)
      throw InputError(doc ? "/marking" : "/group",
                       std::string(cyclo_status_name(s)) + ": " + cyclo_last_error());
    return MarkedPtr(m);
  }
  if (!doc->is_array() || doc->empty())
    throw InputError("/marking", "expected \"default\" or a non-empty array of bindings");
  std::vector<std::string> symbols;
  std::vector<Word> words;
  for (std::size_t i = 0; i < doc->size(); ++i) {
    const auto& b = (*doc)[i];
    const std::string at = child("/marking", i);
    if (!b.is_object()) throw InputError(at, "expected {\"symbol\", \"word\"}");
    only_fields(b, at, {"symbol", "word"});
    const auto& sym = field(b, at, "symbol");
    if (!sym.is_string() || sym.get<std::string>().empty())
      throw InputError(child(at, "symbol"), "expected a non-empty string");
    symbols.push_back(sym.get<std::string>());
    words.push_back(parse_word(field(b, at, "word"), child(at, "word")));
  }
  WordBuffer buf;
  buf.assign(words);
  std::vector<const char*> csyms;
  for (const auto& s : symbols) csyms.push_back(s.c_str());
  const auto s = cyclo_marked_remark(g, csyms.data(), buf.words.data(), buf.words.size(), &m);
  if (s != CYCLO_OK)
    throw InputError("/marking", std::string(cyclo_status_name(s)) + ": " + cyclo_last_error());
  return MarkedPtr(m);
}

VerifyConfig parse_verify(const json& doc) {
  VerifyConfig c;
  if (!doc.is_object()) throw InputError("/verify", "expected an object");
  only_fields(doc, "/verify", {"convergence_tolerance", "convergence_radius", "girth_horizon"});
  if (auto it = doc.find("convergence_tolerance"); it != doc.end()) {
    if (!it->is_number() || it->get<double>() < 0)
      throw InputError("/verify/convergence_tolerance", "expected a non-negative number");
    c.convergence_tolerance = it->get<double>();
  }
  if (auto it = doc.find("convergence_radius"); it != doc.end())
    c.convergence_radius =
        static_cast<std::uint32_t>(unsigned_field(*it, "/verify/convergence_radius"));
  if (auto it = doc.find("girth_horizon"); it != doc.end())
    c.girth_horizon = static_cast<std::uint32_t>(unsigned_field(*it, "/verify/girth_horizon"));
  return c;
}

}  // namespace

Job parse_job(const json& doc) {
  if (!doc.is_object()) throw InputError("", "expected a job object");
  only_fields(doc, "", {"group", "marking", "schreier", "verify"});
  Job job;
  job.group = parse_group(field(doc, "", "group"), "/group");
  auto it = doc.find("marking");
  job.marked = parse_marking(it == doc.end() ? nullptr : &*it, job.group.get());
  if (auto s = doc.find("schreier"); s != doc.end()) {
    if (!s->is_object()) throw InputError("/schreier", "expected an object");
    only_fields(*s, "/schreier", {"target", "images"});
    SchreierJob sj;
    sj.target = parse_group(field(*s, "/schreier", "target"), "/schreier/target");
    const auto& images = field(*s, "/schreier", "images");
    if (!images.is_array()) throw InputError("/schreier/images", "expected an array of words");
    for (std::size_t i = 0; i < images.size(); ++i)
      sj.images.push_back(parse_word(images[i], child("/schreier/images", i)));
    job.schreier = std::move(sj);
  }
  if (auto v = doc.find("verify"); v != doc.end()) job.verify = parse_verify(*v);
  return job;
}

}  // namespace cli
