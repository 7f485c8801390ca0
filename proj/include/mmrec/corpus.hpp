#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace mmrec {

enum class Split { Train, Test };

struct Review {
  std::string review_id;
  std::string user_id;
  std::string business_id;
  int rating = 0;  // 1..5
  std::string text;
  std::vector<std::string> image_refs;
};

// A set of reviews plus an optional train/test tag per review. Parsing leaves
// the split map empty; split_corpus fills it exhaustively.
struct ReviewCorpus {
  std::vector<Review> reviews;
  std::unordered_map<std::string, Split> split;

  bool has_splits() const { return split.size() == reviews.size() && !reviews.empty(); }
  std::size_t count(Split s) const;
};

// 1 iff the rating is 4 or 5. Throws DomainError outside [1,5].
int binarize_label(int rating);

// One JSON object per line with fields review_id, user_id, business_id,
// rating, text, image_refs and an optional split tag. Throws ParseError with
// the offending line number, DuplicateIdError on repeated review ids.
ReviewCorpus parse_corpus(std::istream& in);
void write_corpus(const ReviewCorpus& corpus, std::ostream& out);

ReviewCorpus load_corpus(const std::filesystem::path& path);
void save_corpus(const ReviewCorpus& corpus, const std::filesystem::path& path);

// Tags every review, placing round(test_fraction * N) reviews in Test via a
// seeded shuffle. Deterministic for a fixed (corpus, fraction, seed).
ReviewCorpus split_corpus(ReviewCorpus corpus, double test_fraction, std::uint64_t seed);

}  // namespace mmrec
