#include "sensediff/topics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace sensediff {

UsageContexts build_usage_contexts(const TokenStream& ts, const std::string& w,
                                   std::size_t half_window) {
  if (half_window < 1) throw ConfigError("context half-window must be >= 1");
  UsageContexts uc;
  uc.word = w;
  for (const auto& sentence : ts.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (sentence[i].text != w) continue;
      std::vector<std::string> bag;
      const std::size_t lo = i >= half_window ? i - half_window : 0;
      const std::size_t hi = std::min(sentence.size(), i + half_window + 1);
      for (std::size_t j = lo; j < hi; ++j) {
        if (j == i || sentence[j].text == w) continue;
        bag.push_back(sentence[j].text);
      }
      if (!bag.empty()) uc.documents.push_back(std::move(bag));
    }
  }
  return uc;
}

namespace {

// Direct-assignment collapsed Gibbs sampler for the HDP topic model.
// Topics are created and retired as the global stick is broken/returned.
class HdpSampler {
 public:
  HdpSampler(const std::vector<std::vector<int>>& docs, int vocab_size,
             const HdpHyper& h, std::uint64_t seed)
      : docs_(docs), V_(vocab_size), h_(h), rng_(seed) {
    z_.resize(docs_.size());
    n_jk_.resize(docs_.size());
    for (std::size_t j = 0; j < docs_.size(); ++j)
      z_[j].assign(docs_[j].size(), -1);
    beta_new_ = 1.0;
    // Initial sweep assigns tokens incrementally from the conditional.
    for (std::size_t j = 0; j < docs_.size(); ++j)
      for (std::size_t i = 0; i < docs_[j].size(); ++i) sample_token(j, i);
    resample_sticks();
  }

  void iterate() {
    for (std::size_t j = 0; j < docs_.size(); ++j)
      for (std::size_t i = 0; i < docs_[j].size(); ++i) {
        remove_token(j, i);
        sample_token(j, i);
      }
    resample_sticks();
  }

  int num_topics() const { return static_cast<int>(n_k_.size()); }

  std::vector<double> topic_word_dist(int k) const {
    std::vector<double> probs(V_);
    const double denom = n_k_[k] + V_ * h_.beta;
    for (int wrd = 0; wrd < V_; ++wrd)
      probs[wrd] = (n_kw_[k][wrd] + h_.beta) / denom;
    return probs;
  }

  double topic_weight(int k) const {
    return static_cast<double>(n_k_[k]) / static_cast<double>(total_tokens_);
  }

 private:
  void remove_token(std::size_t j, std::size_t i) {
    const int k = z_[j][i];
    const int wrd = docs_[j][i];
    --n_jk_[j][k];
    --n_kw_[k][wrd];
    --n_k_[k];
    --total_tokens_;
    z_[j][i] = -1;
    if (n_k_[k] == 0) retire_topic(k);
  }

  void retire_topic(int k) {
    beta_new_ += beta_k_[k];  // the stick mass returns to the remainder
    const int last = num_topics() - 1;
    if (k != last) {
      n_kw_[k] = std::move(n_kw_[last]);
      n_k_[k] = n_k_[last];
      beta_k_[k] = beta_k_[last];
      for (std::size_t j = 0; j < docs_.size(); ++j) {
        n_jk_[j][k] = n_jk_[j][last];
        for (auto& zz : z_[j])
          if (zz == last) zz = k;
      }
    }
    n_kw_.pop_back();
    n_k_.pop_back();
    beta_k_.pop_back();
    for (auto& row : n_jk_) row.pop_back();
  }

  int spawn_topic() {
    // Break the remaining stick for the new topic.
    std::gamma_distribution<double> g1(1.0, 1.0), g2(h_.gamma, 1.0);
    const double a = g1(rng_), b = g2(rng_);
    const double frac = (a + b) > 0.0 ? a / (a + b) : 0.5;
    beta_k_.push_back(beta_new_ * frac);
    beta_new_ *= (1.0 - frac);
    n_kw_.emplace_back(V_, 0);
    n_k_.push_back(0);
    for (auto& row : n_jk_) row.push_back(0);
    return num_topics() - 1;
  }

  void sample_token(std::size_t j, std::size_t i) {
    const int wrd = docs_[j][i];
    const int K = num_topics();
    probs_.resize(K + 1);
    double sum = 0.0;
    for (int k = 0; k < K; ++k) {
      const double f = (n_kw_[k][wrd] + h_.beta) / (n_k_[k] + V_ * h_.beta);
      sum += (n_jk_[j][k] + h_.alpha0 * beta_k_[k]) * f;
      probs_[k] = sum;
    }
    sum += h_.alpha0 * beta_new_ / static_cast<double>(V_);
    probs_[K] = sum;

    std::uniform_real_distribution<double> unif(0.0, sum);
    const double r = unif(rng_);
    int k = static_cast<int>(
        std::lower_bound(probs_.begin(), probs_.end(), r) - probs_.begin());
    if (k >= K) k = spawn_topic();

    z_[j][i] = k;
    ++n_jk_[j][k];
    ++n_kw_[k][wrd];
    ++n_k_[k];
    ++total_tokens_;
  }

  // Table counts via the Antoniak scheme, then the global stick from a
  // Dirichlet over per-topic table totals.
  void resample_sticks() {
    const int K = num_topics();
    std::vector<double> m_k(K, 0.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t j = 0; j < docs_.size(); ++j) {
      for (int k = 0; k < K; ++k) {
        const int n = n_jk_[j][k];
        if (n == 0) continue;
        const double ab = h_.alpha0 * beta_k_[k];
        for (int t = 0; t < n; ++t)
          if (unif(rng_) < ab / (ab + t)) m_k[k] += 1.0;
      }
    }
    double total = 0.0;
    std::vector<double> draw(K + 1);
    for (int k = 0; k < K; ++k) {
      std::gamma_distribution<double> g(std::max(m_k[k], 1e-3), 1.0);
      draw[k] = g(rng_);
      total += draw[k];
    }
    std::gamma_distribution<double> g(h_.gamma, 1.0);
    draw[K] = g(rng_);
    total += draw[K];
    for (int k = 0; k < K; ++k) beta_k_[k] = draw[k] / total;
    beta_new_ = draw[K] / total;
  }

  const std::vector<std::vector<int>>& docs_;
  const int V_;
  const HdpHyper h_;
  std::mt19937_64 rng_;

  std::vector<std::vector<int>> z_;      // token topic assignments
  std::vector<std::vector<int>> n_jk_;   // doc x topic counts
  std::vector<std::vector<int>> n_kw_;   // topic x word counts
  std::vector<int> n_k_;                 // topic totals
  std::vector<double> beta_k_;           // global stick weights
  double beta_new_ = 1.0;                // unbroken stick mass
  long total_tokens_ = 0;
  std::vector<double> probs_;            // scratch for sampling
};

}  // namespace

TopicModel induce_topics(const UsageContexts& uc, const HdpHyper& hyper,
                         std::uint64_t seed, int iters) {
  if (uc.documents.empty())
    throw EmptyModelError("no usage contexts for word: " + uc.word);
  if (iters < 1) throw ConfigError("iters must be >= 1");

  TopicModel model;
  model.word = uc.word;
  model.seed = seed;
  model.iterations = iters;

  for (const auto& doc : uc.documents)
    for (const auto& w : doc) model.vocab.push_back(w);
  std::sort(model.vocab.begin(), model.vocab.end());
  model.vocab.erase(std::unique(model.vocab.begin(), model.vocab.end()),
                    model.vocab.end());
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < model.vocab.size(); ++i)
    index[model.vocab[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> docs;
  docs.reserve(uc.documents.size());
  for (const auto& doc : uc.documents) {
    std::vector<int> ids;
    ids.reserve(doc.size());
    for (const auto& w : doc) ids.push_back(index.at(w));
    docs.push_back(std::move(ids));
  }

  HdpSampler sampler(docs, static_cast<int>(model.vocab.size()), hyper, seed);
  for (int it = 1; it < iters; ++it) sampler.iterate();

  for (int k = 0; k < sampler.num_topics(); ++k)
    model.topics.push_back(
        Topic{sampler.topic_weight(k), sampler.topic_word_dist(k)});
  std::stable_sort(model.topics.begin(), model.topics.end(),
                   [](const Topic& a, const Topic& b) {
                     return a.weight > b.weight;
                   });
  return model;
}

std::vector<std::pair<std::string, double>> TopicModel::top_words(
    std::size_t topic, std::size_t count) const {
  const auto& probs = topics.at(topic).word_probs;
  std::vector<std::size_t> idx(probs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    return vocab[a] < vocab[b];
  });
  if (idx.size() > count) idx.resize(count);
  std::vector<std::pair<std::string, double>> out;
  out.reserve(idx.size());
  for (auto i : idx) out.emplace_back(vocab[i], probs[i]);
  return out;
}

namespace {

double entropy2(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

void check_distribution_pair(std::span<const double> p,
                             std::span<const double> q) {
  if (p.size() != q.size())
    throw InputMismatchError("distributions have different dimensions");
  auto check_sum = [](std::span<const double> d) {
    double s = 0.0;
    for (double x : d) s += x;
    if (std::abs(s - 1.0) > 1e-6)
      throw DataError("distribution does not sum to 1");
  };
  check_sum(p);
  check_sum(q);
}

}  // namespace

double js_divergence(std::span<const double> p, std::span<const double> q) {
  check_distribution_pair(p, q);
  std::vector<double> m(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m[i] = (p[i] + q[i]) / 2.0;
  double js = entropy2(m) - (entropy2(p) + entropy2(q)) / 2.0;
  // Guard rounding just outside [0,1].
  if (js < 0.0 && js > -1e-9) js = 0.0;
  if (js > 1.0 && js < 1.0 + 1e-9) js = 1.0;
  return js;
}

double sim(std::span<const double> p, std::span<const double> q) {
  return 1.0 - js_divergence(p, q);
}

std::vector<std::string> vocab_union(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<double> project(const std::vector<std::string>& from_vocab,
                            const std::vector<double>& probs,
                            const std::vector<std::string>& to_vocab) {
  std::vector<double> out(to_vocab.size(), 0.0);
  std::size_t t = 0;
  for (std::size_t i = 0; i < from_vocab.size(); ++i) {
    while (t < to_vocab.size() && to_vocab[t] < from_vocab[i]) ++t;
    if (t == to_vocab.size() || to_vocab[t] != from_vocab[i])
      throw InputMismatchError("projection target lacks word: " +
                               from_vocab[i]);
    out[t] = probs[i];
  }
  return out;
}

SenseDistribution make_sense_distribution(const std::string& sense_id,
                                          const std::vector<std::string>& lemmas,
                                          const std::string& gloss) {
  static const std::vector<std::string> function_words = {
      "and", "are", "but", "for", "from", "has", "have", "its", "not",
      "one", "that", "the", "this", "used", "was", "which", "with"};
  NormPolicy policy;
  std::vector<std::string> words = lemmas;
  std::istringstream iss(gloss);
  std::string raw;
  while (iss >> raw) {
    std::string tok = normalize_token(raw, policy);
    if (tok.size() < 3) continue;
    if (std::find(function_words.begin(), function_words.end(), tok) !=
        function_words.end())
      continue;
    words.push_back(tok);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  if (words.empty())
    throw DataError("sense has no lemmas or gloss content: " + sense_id);

  SenseDistribution sd;
  sd.sense_id = sense_id;
  sd.probs.assign(words.size(), 1.0 / static_cast<double>(words.size()));
  sd.vocab = std::move(words);
  return sd;
}

std::vector<double> ts_affinities(const std::vector<SenseDistribution>& senses,
                                  const TopicModel& model) {
  if (senses.empty()) throw DataError("ts_affinity: no senses");
  if (model.topics.empty()) throw DataError("ts_affinity: no topics");

  std::vector<std::string> shared = model.vocab;
  for (const auto& s : senses) shared = vocab_union(shared, s.vocab);

  std::vector<std::vector<double>> sense_p, topic_p;
  for (const auto& s : senses)
    sense_p.push_back(project(s.vocab, s.probs, shared));
  for (const auto& t : model.topics)
    topic_p.push_back(project(model.vocab, t.word_probs, shared));

  std::vector<double> numer(topic_p.size(), 0.0);
  double denom = 0.0;
  for (std::size_t l = 0; l < topic_p.size(); ++l) {
    for (const auto& sp : sense_p) {
      const double s = sim(sp, topic_p[l]);
      numer[l] += s;
      denom += s;
    }
  }
  std::vector<double> out(topic_p.size(), 0.0);
  if (denom > 0.0)
    for (std::size_t l = 0; l < out.size(); ++l) out[l] = numer[l] / denom;
  return out;
}

double ts_affinity(std::size_t topic_index,
                   const std::vector<SenseDistribution>& senses,
                   const TopicModel& model) {
  return ts_affinities(senses, model).at(topic_index);
}

std::vector<CandidateSense> flag_lau(const TopicModel& mine,
                                     const TopicModel& other,
                                     double threshold) {
  if (mine.word != other.word)
    throw InputMismatchError("flag_lau: models describe different words ('" +
                             mine.word + "' vs '" + other.word + "')");
  if (threshold < 0.0 || threshold > 1.0)
    throw ConfigError("lau threshold must lie in [0,1]");

  const auto shared = vocab_union(mine.vocab, other.vocab);
  std::vector<std::vector<double>> theirs;
  theirs.reserve(other.topics.size());
  for (const auto& t : other.topics)
    theirs.push_back(project(other.vocab, t.word_probs, shared));

  std::vector<CandidateSense> out;
  for (std::size_t i = 0; i < mine.topics.size(); ++i) {
    const auto p = project(mine.vocab, mine.topics[i].word_probs, shared);
    double max_sim = 0.0;
    for (const auto& q : theirs) max_sim = std::max(max_sim, sim(p, q));
    if (max_sim < threshold) {
      CandidateSense cand;
      cand.word = mine.word;
      cand.source_corpus = mine.corpus_id;
      cand.novelty = 1.0 - max_sim;
      cand.method = Method::lau;
      nlohmann::json top = nlohmann::json::array();
      for (const auto& [w, prob] : mine.top_words(i, 20)) {
        cand.members.push_back(w);
        top.push_back(nlohmann::json{{"word", w}, {"prob", prob}});
      }
      cand.payload["topic_index"] = i;
      cand.payload["topic_weight"] = mine.topics[i].weight;
      cand.payload["max_similarity"] = max_sim;
      cand.payload["top_words"] = top;
      out.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace sensediff
