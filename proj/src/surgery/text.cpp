#include "csurg/surgery/text.hpp"

#include "csurg/error.hpp"

namespace csurg::surgery {

using nlohmann::json;

namespace {

std::string_view presentation_name(Presentation p) {
  switch (p) {
    case Presentation::open_book: return "open_book";
    case Presentation::glued: return "glued";
    case Presentation::catalog: return "catalog";
  }
  return "catalog";
}

Presentation parse_presentation(const std::string& s) {
  if (s == "open_book") return Presentation::open_book;
  if (s == "glued") return Presentation::glued;
  if (s == "catalog") return Presentation::catalog;
  throw Error(ErrorCode::malformed_text, "unknown presentation " + s);
}

json word_json(const MonodromyWord& w) { return to_string(w); }

}  // namespace

json to_json(const PageSpec& page) {
  json handles = json::array();
  for (const auto& [k, m] : page.handles) handles.push_back({k, m});
  json cores = json::array();
  for (const auto& c : page.cores) cores.push_back({c.index, c.label});
  return {{"name", page.name},       {"half_dim", page.half_dim}, {"handles", handles},
          {"stein", page.stein},     {"spheres", page.spheres},   {"cores", cores}};
}

json to_json(const FillabilityFlags& f) {
  return {{"weakly", to_string(f.weakly)},
          {"symplectically", to_string(f.symplectically)},
          {"exactly", to_string(f.exactly)},
          {"stein", to_string(f.stein)}};
}

json to_json(const ManifoldDescriptor& m) {
  json j;
  j["dim"] = m.dim;
  j["presentation"] = presentation_name(m.presentation);
  j["identity"] = m.identity;
  j["flags"] = to_json(m.flags);
  if (m.open_book)
    j["open_book"] = {{"page", to_json(m.open_book->page)}, {"word", word_json(m.open_book->word)}};
  if (m.fibration)
    j["fibration"] = {{"page", to_json(m.fibration->page)},
                      {"phi", word_json(m.fibration->phi)},
                      {"psi", word_json(m.fibration->psi)}};
  json legs = json::array();
  for (const auto& l : m.legendrians) legs.push_back({{"label", l.label}, {"standard", l.standard}});
  j["legendrians"] = legs;
  json hs = json::array();
  for (const auto& h : m.hypersurfaces) hs.push_back(to_json(h));
  j["hypersurfaces"] = hs;
  json hist = json::array();
  for (const auto& h : m.history) hist.push_back({{"op", h.op}, {"args", h.args}});
  j["history"] = hist;
  return j;
}

PageSpec page_from_json(const json& j) {
  PageSpec p;
  p.name = j.at("name").get<std::string>();
  p.half_dim = j.at("half_dim").get<int>();
  for (const auto& h : j.at("handles")) p.handles.emplace_back(h.at(0).get<int>(), h.at(1).get<int>());
  p.stein = j.at("stein").get<bool>();
  p.spheres = j.at("spheres").get<std::vector<std::string>>();
  for (const auto& c : j.value("cores", json::array()))
    p.cores.push_back({c.at(0).get<int>(), c.at(1).get<std::string>()});
  validate_page(p);
  return p;
}

FillabilityFlags flags_from_json(const json& j) {
  FillabilityFlags f;
  f.weakly = parse_tri(j.at("weakly").get<std::string>());
  f.symplectically = parse_tri(j.at("symplectically").get<std::string>());
  f.exactly = parse_tri(j.at("exactly").get<std::string>());
  f.stein = parse_tri(j.at("stein").get<std::string>());
  if (!respects_closure(f))
    throw Error(ErrorCode::malformed_text, "flags violate stein => exact => symplectic => weak");
  return f;
}

ManifoldDescriptor descriptor_from_json(const json& j) {
  try {
    ManifoldDescriptor m;
    m.dim = j.at("dim").get<int>();
    m.presentation = parse_presentation(j.at("presentation").get<std::string>());
    m.identity = j.value("identity", "");
    m.flags = flags_from_json(j.at("flags"));
    if (j.contains("open_book")) {
      const auto& ob = j.at("open_book");
      m.open_book = OpenBook{page_from_json(ob.at("page")),
                             parse_word(ob.at("word").get<std::string>())};
      validate_open_book(*m.open_book);
    }
    if (j.contains("fibration")) {
      const auto& fb = j.at("fibration");
      m.fibration = Fibration{page_from_json(fb.at("page")),
                              parse_word(fb.at("phi").get<std::string>()),
                              parse_word(fb.at("psi").get<std::string>())};
    }
    for (const auto& l : j.value("legendrians", json::array()))
      m.legendrians.push_back({l.at("label").get<std::string>(), l.at("standard").get<bool>()});
    for (const auto& h : j.value("hypersurfaces", json::array()))
      m.hypersurfaces.push_back(page_from_json(h));
    for (const auto& h : j.value("history", json::array()))
      m.history.push_back(
          {h.at("op").get<std::string>(), h.at("args").get<std::vector<std::string>>()});
    if (m.dim < 3 || m.dim % 2 == 0)
      throw Error(ErrorCode::malformed_text, "descriptor dimension must be odd and >= 3");
    if (m.open_book && 2 * m.open_book->page.half_dim + 1 != m.dim)
      throw Error(ErrorCode::malformed_text, "page dimension disagrees with descriptor dimension");
    return m;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::malformed_text, std::string("descriptor: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::malformed_text) throw;
    throw Error(ErrorCode::malformed_text, std::string("descriptor: ") + e.what());
  }
}

std::string serialize(const ManifoldDescriptor& m) { return to_json(m).dump(2) + "\n"; }

ManifoldDescriptor parse_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::malformed_text, std::string("descriptor: ") + e.what());
  }
  return descriptor_from_json(j);
}

}  // namespace csurg::surgery
