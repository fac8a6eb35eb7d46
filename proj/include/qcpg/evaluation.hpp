#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcpg/parse_tree.hpp"
#include "qcpg/quality.hpp"
#include "qcpg/semantic.hpp"

namespace qcpg {

// Sentence-level BLEU-4 on whitespace tokens, 0-100. Precisions for n >= 2
// with no matches use add-one smoothing; the brevity penalty uses the
// reference closest in length (shorter on ties). Empty candidate scores 0.
double bleu(std::string_view candidate, const std::vector<std::string>& references);

// bleu(generated, {source}); high means copying.
double self_bleu(std::string_view generated, std::string_view source);
// Mean of self_bleu over aligned lists.
double corpus_self_bleu(const std::vector<std::string>& generated,
                        const std::vector<std::string>& sources);

struct SystemOutput {
  std::string name;
  std::vector<std::string> generated;
  std::vector<std::optional<ParseTree>> trees;  // parse of each output, if known
};

struct EvalRow {
  std::string name;
  QualityVector mean;
  double self_bleu = 0.0;
  std::optional<double> bleu;
  std::size_t n = 0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
};

// Items whose source or output parse is missing are excluded from every
// column of that system's row. `references[i]` lists the references of item i.
EvalReport evaluate_systems(const std::vector<SystemOutput>& systems,
                            const std::vector<std::string>& sources,
                            const std::vector<std::optional<ParseTree>>& source_trees,
                            const std::optional<std::vector<std::vector<std::string>>>& references,
                            const SemanticScorer& scorer);

// system<TAB>sem<TAB>syn<TAB>lex<TAB>self_bleu<TAB>bleu<TAB>n, 2 decimals,
// after a header line; a missing BLEU is written as "-".
void write_report_tsv(std::ostream& out, const EvalReport& report);

// Tie-corrected Kendall tau-b. Throws AllTied when either side is constant,
// LengthMismatch for unequal or too short inputs.
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qcpg
