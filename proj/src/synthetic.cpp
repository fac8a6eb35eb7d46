#include "qcpg/synthetic.hpp"

#include <array>
#include <string>

#include "qcpg/random.hpp"

namespace qcpg {

namespace {

using Synonyms = std::vector<std::string>;

const std::vector<Synonyms> kAgents = {
    {"cat", "kitten", "feline"},      {"dog", "puppy", "hound"},     {"man", "guy", "gentleman"},
    {"woman", "lady"},                {"child", "kid", "youngster"}, {"chef", "cook"},
    {"student", "pupil", "learner"},  {"farmer", "grower"},          {"girl", "lass"},
    {"boy", "lad", "youth"},          {"teacher", "tutor", "instructor"}};
const std::vector<Synonyms> kActions = {
    {"chased", "pursued", "followed"}, {"carried", "held", "lifted", "hauled"},
    {"watched", "observed", "viewed"}, {"painted", "decorated", "coloured"},
    {"found", "discovered", "located"}, {"cleaned", "washed", "scrubbed"},
    {"moved", "shifted", "pushed"}};
const std::vector<Synonyms> kObjects = {
    {"ball", "sphere", "globe"},        {"book", "novel", "volume"}, {"car", "vehicle", "automobile"},
    {"box", "crate", "carton"},         {"fence", "railing"},        {"bicycle", "bike", "cycle"},
    {"table", "desk", "counter"},       {"basket", "hamper"}};
const std::vector<Synonyms> kAdjectives = {
    {"big", "large", "huge", "enormous"}, {"small", "little", "tiny"}, {"old", "ancient", "aged"},
    {"happy", "cheerful", "joyful"},      {"young", "youthful"},      {"tired", "weary", "exhausted"}};
const std::vector<Synonyms> kPlaces = {
    {"park", "garden", "meadow"},   {"kitchen", "galley"},  {"street", "road", "avenue"},
    {"yard", "backyard", "lawn"},   {"market", "bazaar"},   {"station", "terminal", "depot"}};
// Proper names have no synonyms; clusters using them are lexically rigid.
const std::vector<Synonyms> kNames = {{"Alice"}, {"Boris"}, {"Chen"}, {"Dana"}, {"Elif"}};

struct Event {
  std::size_t agent = 0;
  std::size_t action = 0;
  std::size_t object = 0;
  std::size_t adjective = 0;
  std::size_t place = 0;
  bool named_agent = false;
};

struct Words {
  std::string agent, action, object, adjective, place, det1, det2;
  bool named = false;
};

struct Sentence {
  std::string text;
  std::string tree;
};

std::string agent_np(const Words& w, bool with_adj) {
  if (w.named) return "(NP (NNP " + w.agent + "))";
  if (with_adj) return "(NP (DT " + w.det1 + ") (JJ " + w.adjective + ") (NN " + w.agent + "))";
  return "(NP (DT " + w.det1 + ") (NN " + w.agent + "))";
}

std::string agent_text(const Words& w, bool with_adj) {
  if (w.named) return w.agent;
  return w.det1 + (with_adj ? " " + w.adjective : "") + " " + w.agent;
}

std::string object_np(const Words& w) { return "(NP (DT " + w.det2 + ") (NN " + w.object + "))"; }
std::string place_pp(const Words& w) { return "(PP (IN in) (NP (DT the) (NN " + w.place + ")))"; }

Sentence realize(int templ, const Words& w) {
  const std::string obj = w.det2 + " " + w.object;
  const std::string place = "in the " + w.place;
  switch (templ) {
    case 0:  // active with place
      return {agent_text(w, true) + " " + w.action + " " + obj + " " + place + " .",
              "(S " + agent_np(w, true) + " (VP (VBD " + w.action + ") " + object_np(w) + " " +
                  place_pp(w) + ") (. .))"};
    case 1:  // passive
      return {obj + " was " + w.action + " by " + agent_text(w, true) + " " + place + " .",
              "(S " + object_np(w) + " (VP (VBD was) (VP (VBN " + w.action + ") (PP (IN by) " +
                  agent_np(w, true) + ") " + place_pp(w) + ")) (. .))"};
    case 2:  // fronted place
      return {place + " , " + agent_text(w, true) + " " + w.action + " " + obj + " .",
              "(S " + place_pp(w) + " (, ,) " + agent_np(w, true) + " (VP (VBD " + w.action + ") " +
                  object_np(w) + ") (. .))"};
    case 3:  // cleft
      return {"it was " + agent_text(w, true) + " that " + w.action + " " + obj + " " + place + " .",
              "(S (NP (PRP it)) (VP (VBD was) " + agent_np(w, true) +
                  " (SBAR (WHNP (WDT that)) (S (VP (VBD " + w.action + ") " + object_np(w) + " " +
                  place_pp(w) + ")))) (. .))"};
    case 4:  // short active
      return {agent_text(w, false) + " " + w.action + " " + obj + " .",
              "(S " + agent_np(w, false) + " (VP (VBD " + w.action + ") " + object_np(w) + ") (. .))"};
    default:  // relative clause on the agent
      return {agent_text(w, false) + " , who was " + w.adjective + " , " + w.action + " " + obj + " " +
                  place + " .",
              "(S (NP " + agent_np(w, false) + " (, ,) (SBAR (WHNP (WP who)) (S (VP (VBD was) (ADJP (JJ " +
                  w.adjective + "))))) (, ,)) (VP (VBD " + w.action + ") " + object_np(w) + " " +
                  place_pp(w) + ") (. .))"};
  }
}

constexpr int kTemplates = 6;

}  // namespace

std::vector<Cluster> synthetic_corpus(const SyntheticCorpusOptions& options) {
  std::vector<Cluster> clusters;
  clusters.reserve(options.clusters);
  for (std::size_t c = 0; c < options.clusters; ++c) {
    CounterRng rng(options.seed, RngStream::kSynthetic, c);
    Event e;
    e.named_agent = rng.uniform() < 0.2;
    e.agent = rng.below(e.named_agent ? kNames.size() : kAgents.size());
    e.action = rng.below(kActions.size());
    e.object = rng.below(kObjects.size());
    e.adjective = rng.below(kAdjectives.size());
    e.place = rng.below(kPlaces.size());
    // How freely members of this cluster swap in synonyms.
    const double variability = 0.15 + 0.8 * rng.uniform();

    auto pick = [&](const Synonyms& options_) -> const std::string& {
      if (options_.size() == 1 || rng.uniform() >= variability) return options_.front();
      return options_[1 + rng.below(options_.size() - 1)];
    };

    Cluster cluster;
    cluster.cluster_id = "syn-" + std::to_string(c);
    cluster.trees.emplace();
    for (std::size_t k = 0; k < options.sentences_per_cluster; ++k) {
      Words w;
      w.named = e.named_agent;
      w.agent = e.named_agent ? kNames[e.agent].front() : pick(kAgents[e.agent]);
      w.action = pick(kActions[e.action]);
      w.object = pick(kObjects[e.object]);
      w.adjective = pick(kAdjectives[e.adjective]);
      w.place = pick(kPlaces[e.place]);
      w.det1 = rng.uniform() < 0.7 ? "the" : "a";
      w.det2 = rng.uniform() < 0.7 ? "the" : "a";
      const int templ = (k == 0 || rng.uniform() >= variability) ? static_cast<int>(rng.below(2)) * 4
                                                                  : static_cast<int>(rng.below(kTemplates));
      Sentence s = realize(templ, w);
      // Avoid exact duplicates inside a cluster; try a different template.
      for (int attempt = 1; attempt < kTemplates; ++attempt) {
        bool dup = false;
        for (const auto& existing : cluster.sentences) dup = dup || existing == s.text;
        if (!dup) break;
        s = realize((templ + attempt) % kTemplates, w);
      }
      cluster.sentences.push_back(std::move(s.text));
      cluster.trees->push_back(std::move(s.tree));
    }
    clusters.push_back(std::move(cluster));
  }
  return clusters;
}

}  // namespace qcpg
