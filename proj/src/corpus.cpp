#include "sensediff/corpus.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace sensediff {

namespace {

bool is_ascii_punct(unsigned char c) { return c < 128 && std::ispunct(c); }

// Minimal UTF-8 well-formedness check (RFC 3629 ranges, no overlongs).
bool valid_utf8(const std::string& s) {
  std::size_t i = 0;
  const auto n = s.size();
  while (i < n) {
    unsigned char c = s[i];
    std::size_t len;
    if (c < 0x80) {
      len = 1;
    } else if ((c & 0xE0) == 0xC0) {
      if (c < 0xC2) return false;  // overlong
      len = 2;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
    } else if ((c & 0xF8) == 0xF0) {
      if (c > 0xF4) return false;  // beyond U+10FFFF
      len = 4;
    } else {
      return false;
    }
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return false;
    }
    if (len == 3) {
      unsigned char c1 = s[i + 1];
      if (c == 0xE0 && c1 < 0xA0) return false;          // overlong
      if (c == 0xED && c1 > 0x9F) return false;          // surrogate
    } else if (len == 4) {
      unsigned char c1 = s[i + 1];
      if (c == 0xF0 && c1 < 0x90) return false;          // overlong
      if (c == 0xF4 && c1 > 0x8F) return false;          // beyond U+10FFFF
    }
    i += len;
  }
  return true;
}

}  // namespace

std::string normalize_token(const std::string& raw, const NormPolicy& policy) {
  std::size_t begin = 0, end = raw.size();
  if (policy.strip_punct) {
    while (begin < end && is_ascii_punct(raw[begin])) ++begin;
    while (end > begin && is_ascii_punct(raw[end - 1])) --end;
  }
  std::string out;
  out.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) {
    unsigned char c = raw[i];
    out.push_back(policy.fold_case && c < 128
                      ? static_cast<char>(std::tolower(c))
                      : raw[i]);
  }
  if (out.size() < policy.min_token_len) out.clear();
  return out;
}

TokenStream normalize_tokens(const std::vector<std::string>& raw_lines,
                             const NormPolicy& policy) {
  TokenStream ts;
  ts.has_pos = policy.pos_tagged;
  std::size_t line_no = 0;
  for (const auto& line : raw_lines) {
    ++line_no;
    if (!valid_utf8(line)) {
      ++ts.skipped_lines;
      ts.skipped_line_numbers.push_back(line_no);
      continue;
    }
    std::vector<Token> sentence;
    std::istringstream iss(line);
    std::string raw;
    while (iss >> raw) {
      std::string pos;
      if (policy.pos_tagged) {
        auto us = raw.rfind('_');
        if (us != std::string::npos && us > 0 && us + 1 < raw.size()) {
          pos = raw.substr(us + 1);
          raw = raw.substr(0, us);
        }
      }
      std::string text = normalize_token(raw, policy);
      if (text.empty()) continue;
      sentence.push_back(Token{std::move(text), std::move(pos)});
    }
    if (!sentence.empty()) ts.sentences.push_back(std::move(sentence));
  }
  return ts;
}

TokenStream read_token_stream(std::istream& in, const NormPolicy& policy) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return normalize_tokens(lines, policy);
}

TokenStream read_token_file(const std::string& path, const NormPolicy& policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open corpus file: " + path);
  return read_token_stream(in, policy);
}

std::uint64_t FeatureCounts::pair(const std::string& w,
                                  const std::string& f) const {
  auto wi = pair_count.find(w);
  if (wi == pair_count.end()) return 0;
  auto fi = wi->second.find(f);
  return fi == wi->second.end() ? 0 : fi->second;
}

bool FeatureCounts::has_pair(const std::string& w, const std::string& f) const {
  return pair(w, f) != 0;
}

void FeatureCounts::merge(const FeatureCounts& other) {
  if (window != other.window)
    throw ConfigError("cannot merge FeatureCounts with different windows");
  for (const auto& [w, feats] : other.pair_count) {
    auto& mine = pair_count[w];
    for (const auto& [f, c] : feats) mine[f] += c;
  }
  for (const auto& [w, c] : other.word_marginal) word_marginal[w] += c;
  for (const auto& [f, c] : other.feature_marginal) feature_marginal[f] += c;
  total += other.total;
  has_pos = has_pos || other.has_pos;
  noun_targets.insert(other.noun_targets.begin(), other.noun_targets.end());
}

FeatureCounts count_features(const TokenStream& ts, std::size_t window) {
  if (window < 1) throw ConfigError("window must be >= 1");
  FeatureCounts fc;
  fc.window = window;
  fc.has_pos = ts.has_pos;
  for (const auto& sentence : ts.sentences) {
    const std::size_t n = sentence.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& w = sentence[i];
      if (ts.has_pos && (w.pos == "NN" || w.pos == "NNS"))
        fc.noun_targets.insert(w.text);
      const std::size_t lo = i >= window ? i - window : 0;
      const std::size_t hi = std::min(n, i + window + 1);
      for (std::size_t j = lo; j < hi; ++j) {
        if (j == i) continue;
        const auto& f = sentence[j].text;
        ++fc.pair_count[w.text][f];
        ++fc.word_marginal[w.text];
        ++fc.feature_marginal[f];
        ++fc.total;
      }
    }
  }
  return fc;
}

double lmi_weight(const FeatureCounts& fc, const std::string& w,
                  const std::string& f) {
  const std::uint64_t cwf = fc.pair(w, f);
  if (cwf == 0)
    throw ReferenceError("no stored pair (" + w + ", " + f + ")");
  const double cw = static_cast<double>(fc.word_marginal.at(w));
  const double cf = static_cast<double>(fc.feature_marginal.at(f));
  const double c = static_cast<double>(cwf);
  return c * std::log2(c * static_cast<double>(fc.total) / (cw * cf));
}

}  // namespace sensediff
