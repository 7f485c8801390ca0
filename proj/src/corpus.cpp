#include "mmrec/corpus.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "mmrec/errors.hpp"
#include "mmrec/rng.hpp"

namespace mmrec {

using nlohmann::json;

std::size_t ReviewCorpus::count(Split s) const {
  std::size_t n = 0;
  for (const auto& [id, tag] : split) {
    if (tag == s) ++n;
  }
  return n;
}

int binarize_label(int rating) {
  if (rating < 1 || rating > 5) {
    throw DomainError("rating " + std::to_string(rating) + " outside [1,5]");
  }
  return rating >= 4 ? 1 : 0;
}

namespace {

Review parse_record(const json& rec, std::size_t line_no) {
  Review r;
  try {
    r.review_id = rec.at("review_id").get<std::string>();
    r.user_id = rec.at("user_id").get<std::string>();
    r.business_id = rec.at("business_id").get<std::string>();
    if (!rec.at("rating").is_number_integer()) {
      throw ParseError(line_no, "rating is not an integer");
    }
    r.rating = rec.at("rating").get<int>();
    r.text = rec.value("text", std::string{});
    if (rec.contains("image_refs")) {
      r.image_refs = rec.at("image_refs").get<std::vector<std::string>>();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(line_no, e.what());
  }
  if (r.rating < 1 || r.rating > 5) {
    throw ParseError(line_no, "rating " + std::to_string(r.rating) + " outside [1,5]");
  }
  if (r.review_id.empty()) throw ParseError(line_no, "empty review_id");
  return r;
}

}  // namespace

ReviewCorpus parse_corpus(std::istream& in) {
  ReviewCorpus corpus;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(line_no, e.what());
    }
    Review r = parse_record(rec, line_no);
    if (!seen.insert(r.review_id).second) {
      throw DuplicateIdError("duplicate review_id '" + r.review_id + "' at line " +
                             std::to_string(line_no));
    }
    if (rec.contains("split")) {
      const auto tag = rec.at("split").get<std::string>();
      if (tag == "train") {
        corpus.split.emplace(r.review_id, Split::Train);
      } else if (tag == "test") {
        corpus.split.emplace(r.review_id, Split::Test);
      } else {
        throw ParseError(line_no, "unknown split tag '" + tag + "'");
      }
    }
    corpus.reviews.push_back(std::move(r));
  }
  return corpus;
}

void write_corpus(const ReviewCorpus& corpus, std::ostream& out) {
  for (const Review& r : corpus.reviews) {
    json rec{{"review_id", r.review_id}, {"user_id", r.user_id},
             {"business_id", r.business_id}, {"rating", r.rating},
             {"text", r.text}, {"image_refs", r.image_refs}};
    const auto it = corpus.split.find(r.review_id);
    if (it != corpus.split.end()) {
      rec["split"] = it->second == Split::Train ? "train" : "test";
    }
    out << rec.dump() << "\n";
  }
}

ReviewCorpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file " + path.string());
  return parse_corpus(in);
}

void save_corpus(const ReviewCorpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write corpus file " + path.string());
  write_corpus(corpus, out);
}

ReviewCorpus split_corpus(ReviewCorpus corpus, double test_fraction, std::uint64_t seed) {
  if (corpus.reviews.empty()) throw EmptyInputError("cannot split an empty corpus");
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw DomainError("test_fraction must lie in (0,1)");
  }
  const std::size_t n = corpus.reviews.size();
  const auto n_test = static_cast<std::size_t>(std::lround(test_fraction * static_cast<double>(n)));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(derive_seed(seed, "corpus-split"));
  rng.shuffle(order);

  corpus.split.clear();
  for (std::size_t i = 0; i < n; ++i) {
    corpus.split.emplace(corpus.reviews[order[i]].review_id,
                         i < n_test ? Split::Test : Split::Train);
  }
  return corpus;
}

}  // namespace mmrec
