#include "occ/knowledge.hpp"

#include <cmath>
#include <set>

#include "documents_internal.hpp"
#include "occ/errors.hpp"

namespace occ {

namespace {

using detail::Json;

void check_forest_concepts(const KnowledgeBase::Tables& t) {
  for (const auto& [id, c] : t.concepts) {
    if (c.isa && !t.concepts.contains(*c.isa)) {
      throw ValidationError("concept '" + id + "' isa undeclared concept '" + *c.isa + "'");
    }
  }
  // Each node has at most one parent, so a cycle shows up as a walk that
  // takes more steps than there are nodes.
  for (const auto& [id, c] : t.concepts) {
    const Concept* cur = &c;
    std::size_t steps = 0;
    while (cur->isa) {
      if (++steps > t.concepts.size()) throw ValidationError("taxonomy cycle through concept '" + id + "'");
      cur = &t.concepts.at(*cur->isa);
    }
  }
}

void check_goal_forest(const KnowledgeBase::Tables& t) {
  for (const auto& [id, g] : t.goals) {
    if (!(g.weight > 0.0 && g.weight <= 1.0)) {
      throw ValidationError("goal '" + id + "' weight out of range (0,1]: " + std::to_string(g.weight));
    }
    if (g.parent && !t.goals.contains(*g.parent)) {
      throw ValidationError("goal '" + id + "' has unknown parent '" + *g.parent + "'");
    }
  }
  for (const auto& [id, g] : t.goals) {
    const Goal* cur = &g;
    std::size_t steps = 0;
    while (cur->parent) {
      if (++steps > t.goals.size()) throw ValidationError("goal cycle through goal '" + id + "'");
      cur = &t.goals.at(*cur->parent);
    }
  }
}

}  // namespace

std::string_view to_string(ActorRole r) noexcept { return r == ActorRole::Self ? "self" : "other"; }

KnowledgeBase::KnowledgeBase(Tables tables) : tables_(std::move(tables)) {
  const auto& t = tables_;
  for (const auto& [id, c] : t.concepts) {
    if (id.empty() || c.id != id) throw ValidationError("concept id mismatch or empty: '" + id + "'");
  }
  for (const auto& [id, g] : t.goals) {
    if (id.empty() || g.id != id) throw ValidationError("goal id mismatch or empty: '" + id + "'");
  }
  check_forest_concepts(t);
  check_goal_forest(t);
  for (const auto& [concept_id, a] : t.attitudes) {
    if (!t.concepts.contains(concept_id)) {
      throw ValidationError("attitude references undeclared concept '" + concept_id + "'");
    }
  }
  for (const auto& [agent, liking] : t.relations) {
    if (!(liking >= -1.0 && liking <= 1.0)) {
      throw ValidationError("relation '" + agent + "' liking out of range [-1,1]");
    }
  }
  if (!(t.default_likelihood >= 0.0 && t.default_likelihood < 1.0)) {
    throw ValidationError("defaults.likelihood must be in [0,1)");
  }
}

bool KnowledgeBase::has_goal(std::string_view goal) const {
  return tables_.goals.find(std::string(goal)) != tables_.goals.end();
}

SignedAppraisal KnowledgeBase::resolve_appealingness(std::string_view concept_id) const {
  std::string cur(concept_id);
  // The taxonomy is acyclic, so this walk terminates at a root or unknown id.
  while (true) {
    if (auto a = tables_.attitudes.find(cur); a != tables_.attitudes.end()) return a->second;
    auto c = tables_.concepts.find(cur);
    if (c == tables_.concepts.end() || !c->second.isa) return SignedAppraisal{};
    cur = *c->second.isa;
  }
}

double KnowledgeBase::goal_weight(std::string_view goal) const {
  auto it = tables_.goals.find(std::string(goal));
  if (it == tables_.goals.end()) throw LookupError("unknown goal '" + std::string(goal) + "'");
  double w = it->second.weight;
  while (it->second.parent) {
    it = tables_.goals.find(*it->second.parent);
    w *= it->second.weight;
  }
  return w;
}

double KnowledgeBase::relation_to(std::string_view agent) const {
  auto it = tables_.relations.find(std::string(agent));
  return it == tables_.relations.end() ? 0.0 : it->second;
}

SignedAppraisal KnowledgeBase::standard_of(std::string_view action, ActorRole role) const {
  auto it = tables_.standards.find({std::string(action), role});
  return it == tables_.standards.end() ? SignedAppraisal{} : it->second;
}

OtherDesirability KnowledgeBase::desirability_for_other(std::string_view agent,
                                                        std::string_view event_type) const {
  if (!tables_.user_models) return {UserModelLookup::NoUserModel, {}};
  auto model = tables_.user_models->find(std::string(agent));
  if (model == tables_.user_models->end()) return {UserModelLookup::NoEntry, {}};
  auto entry = model->second.find(std::string(event_type));
  if (entry == model->second.end()) return {UserModelLookup::NoEntry, {}};
  return {UserModelLookup::Found, entry->second};
}

// ---------------------------------------------------------------------------
// Document codec

KnowledgeBase load_kb(std::string_view document) {
  const Json doc = detail::parse_json(document, "knowledge base");
  detail::Reader root(doc, "kb");
  root.allow_only({"version", "concepts", "attitudes", "goals", "standards", "relations",
                   "user_models", "defaults"});
  if (root.integer("version") != 1) throw ValidationError("kb: unsupported version (expected 1)");

  KnowledgeBase::Tables t;
  for (const auto& item : root.optional_array("concepts")) {
    detail::Reader r(item, "kb.concepts[]");
    r.allow_only({"id", "isa"});
    Concept c{r.id("id"), std::nullopt};
    if (r.has("isa")) {
      if (!item.at("isa").is_string()) {
        throw ValidationError("concept '" + c.id + "': isa must be a single concept id (multiple inheritance is not supported)");
      }
      c.isa = r.id("isa");
    }
    if (!t.concepts.emplace(c.id, c).second) throw ValidationError("duplicate concept '" + c.id + "'");
  }
  for (const auto& item : root.optional_array("attitudes")) {
    detail::Reader r(item, "kb.attitudes[]");
    r.allow_only({"concept", "appealingness"});
    const std::string concept_id = r.id("concept");
    if (!t.attitudes.emplace(concept_id, r.appraisal("appealingness")).second) {
      throw ValidationError("duplicate attitude for concept '" + concept_id + "'");
    }
  }
  for (const auto& item : root.optional_array("goals")) {
    detail::Reader r(item, "kb.goals[]");
    r.allow_only({"id", "parent", "weight"});
    Goal g{r.id("id"), std::nullopt, r.number("weight")};
    if (r.has("parent")) g.parent = r.id("parent");
    if (!(g.weight > 0.0 && g.weight <= 1.0)) {
      throw ValidationError("goal '" + g.id + "' weight out of range (0,1]: " + std::to_string(g.weight));
    }
    if (!t.goals.emplace(g.id, g).second) throw ValidationError("duplicate goal '" + g.id + "'");
  }
  for (const auto& item : root.optional_array("standards")) {
    detail::Reader r(item, "kb.standards[]");
    r.allow_only({"action", "actor", "praiseworthiness"});
    const std::string action = r.id("action");
    const std::string actor = r.string("actor");
    ActorRole role;
    if (actor == "self") {
      role = ActorRole::Self;
    } else if (actor == "other") {
      role = ActorRole::Other;
    } else {
      throw ValidationError("standard '" + action + "': actor must be \"self\" or \"other\"");
    }
    if (!t.standards.emplace(std::pair{action, role}, r.appraisal("praiseworthiness")).second) {
      throw ValidationError("duplicate standard '" + action + "' for actor " + actor);
    }
  }
  for (const auto& item : root.optional_array("relations")) {
    detail::Reader r(item, "kb.relations[]");
    r.allow_only({"agent", "liking"});
    const std::string agent = r.id("agent");
    const double liking = r.number("liking");
    if (!(liking >= -1.0 && liking <= 1.0)) {
      throw ValidationError("relation '" + agent + "' liking out of range [-1,1]");
    }
    if (!t.relations.emplace(agent, liking).second) throw ValidationError("duplicate relation '" + agent + "'");
  }
  if (root.has("user_models")) {
    UserModelTable models;
    for (const auto& item : root.optional_array("user_models")) {
      detail::Reader r(item, "kb.user_models[]");
      r.allow_only({"agent", "events"});
      const std::string agent = r.id("agent");
      std::map<std::string, SignedAppraisal> events;
      const Json& ev = r.object("events");
      for (const auto& [key, value] : ev.items()) {
        if (key.empty()) throw ValidationError("user model '" + agent + "': empty event type key");
        if (!value.is_number()) throw ValidationError("user model '" + agent + "' event '" + key + "': desirability must be a number");
        const double d = value.get<double>();
        if (!(d >= -1.0 && d <= 1.0)) {
          throw ValidationError("user model '" + agent + "' event '" + key + "': desirability out of range [-1,1]");
        }
        events.emplace(key, SignedAppraisal(d));
      }
      if (!models.emplace(agent, std::move(events)).second) {
        throw ValidationError("duplicate user model '" + agent + "'");
      }
    }
    t.user_models = std::move(models);
  }
  if (root.has("defaults")) {
    detail::Reader r(root.object("defaults"), "kb.defaults");
    r.allow_only({"likelihood"});
    if (r.has("likelihood")) t.default_likelihood = r.number("likelihood");
  }
  return KnowledgeBase(std::move(t));
}

KnowledgeBase load_kb_file(const std::filesystem::path& path) {
  return load_kb(detail::read_file(path));
}

std::string serialize_kb(const KnowledgeBase& kb) {
  const auto& t = kb.tables();
  detail::OrderedJson doc;
  doc["version"] = 1;
  doc["concepts"] = detail::OrderedJson::array();
  for (const auto& [id, c] : t.concepts) {
    detail::OrderedJson j{{"id", id}};
    if (c.isa) j["isa"] = *c.isa;
    doc["concepts"].push_back(std::move(j));
  }
  doc["attitudes"] = detail::OrderedJson::array();
  for (const auto& [id, a] : t.attitudes) {
    doc["attitudes"].push_back({{"concept", id}, {"appealingness", a.value()}});
  }
  doc["goals"] = detail::OrderedJson::array();
  for (const auto& [id, g] : t.goals) {
    detail::OrderedJson j{{"id", id}};
    if (g.parent) j["parent"] = *g.parent;
    j["weight"] = g.weight;
    doc["goals"].push_back(std::move(j));
  }
  doc["standards"] = detail::OrderedJson::array();
  for (const auto& [key, p] : t.standards) {
    doc["standards"].push_back(
        {{"action", key.first}, {"actor", to_string(key.second)}, {"praiseworthiness", p.value()}});
  }
  doc["relations"] = detail::OrderedJson::array();
  for (const auto& [agent, liking] : t.relations) {
    doc["relations"].push_back({{"agent", agent}, {"liking", liking}});
  }
  if (t.user_models) {
    doc["user_models"] = detail::OrderedJson::array();
    for (const auto& [agent, events] : *t.user_models) {
      detail::OrderedJson ev = detail::OrderedJson::object();
      for (const auto& [key, d] : events) ev[key] = d.value();
      doc["user_models"].push_back({{"agent", agent}, {"events", std::move(ev)}});
    }
  }
  doc["defaults"] = {{"likelihood", t.default_likelihood}};
  return doc.dump(2) + "\n";
}

}  // namespace occ
