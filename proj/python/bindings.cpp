// Python bindings for the main operations: corpus handling, tokenization
// and scoring, emotion arcs, UED metrics, alignment/similarity, the
// Mann-Whitney comparisons, and report summaries.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "emodyn/align.hpp"
#include "emodyn/annotate.hpp"
#include "emodyn/arcs.hpp"
#include "emodyn/corpus.hpp"
#include "emodyn/lexicon.hpp"
#include "emodyn/report.hpp"
#include "emodyn/stats.hpp"
#include "emodyn/ued.hpp"

namespace py = pybind11;
using namespace emodyn;

namespace {

void register_error(py::module_& m) {
  static py::exception<Error> exc(m, "EmodynError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, ((std::string(errc_name(e.code())) + ": ") + e.what()).c_str());
    }
  });
}

}  // namespace

PYBIND11_MODULE(_emodyn, m) {
  m.doc() = "Lexicon-based emotion arcs and utterance emotion dynamics for dialogue corpora";

  register_error(m);

  // --- corpus -------------------------------------------------------------
  py::enum_<SpeakerRole>(m, "SpeakerRole")
      .value("Counselor", SpeakerRole::Counselor)
      .value("Client", SpeakerRole::Client);
  py::enum_<Source>(m, "Source")
      .value("Real", Source::Real)
      .value("Synthetic", Source::Synthetic)
      .value("Mixed", Source::Mixed);
  py::enum_<Who>(m, "Who")
      .value("Whole", Who::Whole)
      .value("Counselor", Who::Counselor)
      .value("Client", Who::Client);

  py::class_<Turn>(m, "Turn")
      .def(py::init<>())
      .def(py::init([](int index, SpeakerRole role, std::string text) {
             return Turn{index, role, std::move(text)};
           }),
           py::arg("index"), py::arg("role"), py::arg("text"))
      .def_readwrite("index", &Turn::index)
      .def_readwrite("role", &Turn::role)
      .def_readwrite("text", &Turn::text);

  py::class_<SessionMetadata>(m, "SessionMetadata")
      .def(py::init<>())
      .def(py::init([](std::string problem, std::string gender, std::string attitude) {
             return SessionMetadata{std::move(problem), std::move(gender), std::move(attitude)};
           }),
           py::arg("problem") = "", py::arg("gender") = "", py::arg("attitude") = "")
      .def_readwrite("problem", &SessionMetadata::problem)
      .def_readwrite("gender", &SessionMetadata::gender)
      .def_readwrite("attitude", &SessionMetadata::attitude);

  py::class_<Dialogue>(m, "Dialogue")
      .def(py::init<>())
      .def_readwrite("id", &Dialogue::id)
      .def_readwrite("source", &Dialogue::source)
      .def_readwrite("metadata", &Dialogue::metadata)
      .def_readwrite("turns", &Dialogue::turns);

  py::class_<Corpus>(m, "Corpus")
      .def(py::init<>())
      .def_readwrite("source", &Corpus::source)
      .def_readwrite("dialogues", &Corpus::dialogues)
      .def("problem_counts", &Corpus::problem_counts)
      .def("__len__", [](const Corpus& c) { return c.dialogues.size(); });

  py::class_<ParseIssue>(m, "ParseIssue")
      .def_readonly("file", &ParseIssue::file)
      .def_readonly("id", &ParseIssue::id)
      .def_readonly("reason", &ParseIssue::reason)
      .def_property_readonly("code", [](const ParseIssue& i) { return errc_name(i.code); });

  py::class_<LoadResult>(m, "LoadResult")
      .def_readonly("corpus", &LoadResult::corpus)
      .def_readonly("issues", &LoadResult::issues);

  m.def("load_corpus", &load_corpus, py::arg("path"), py::arg("source"));
  m.def("save_corpus", &save_corpus, py::arg("corpus"), py::arg("path"));
  m.def("role_stream", &role_stream, py::arg("dialogue"), py::arg("who"));
  m.def("filter_by_problem", &filter_by_problem, py::arg("corpus"), py::arg("allowed"));
  m.def("sample_matched_subsets", &sample_matched_subsets, py::arg("pool"), py::arg("target"),
        py::arg("n_subsets"), py::arg("seed"));

  // --- lexicon --------------------------------------------------------------
  py::enum_<Dimension>(m, "Dimension")
      .value("Valence", Dimension::Valence)
      .value("Arousal", Dimension::Arousal)
      .value("Dominance", Dimension::Dominance);

  py::class_<VadScore>(m, "VadScore")
      .def(py::init([](double v, double a, double d) {
             return VadScore{v, a, d};
           }),
           py::arg("valence") = 0.0, py::arg("arousal") = 0.0, py::arg("dominance") = 0.0)
      .def_readwrite("valence", &VadScore::valence)
      .def_readwrite("arousal", &VadScore::arousal)
      .def_readwrite("dominance", &VadScore::dominance)
      .def("get", &VadScore::get, py::arg("dimension"));

  py::class_<Token>(m, "Token")
      .def_readonly("surface", &Token::surface)
      .def_readonly("position", &Token::position)
      .def("__repr__", [](const Token& t) {
        return "Token('" + t.surface + "', " + std::to_string(t.position) + ")";
      });

  py::class_<ScoredToken>(m, "ScoredToken")
      .def(py::init([](int position, std::optional<VadScore> score) {
             return ScoredToken{position, std::move(score)};
           }),
           py::arg("position"), py::arg("score") = py::none())
      .def_readonly("position", &ScoredToken::position)
      .def_readonly("score", &ScoredToken::score);

  py::class_<VadLexicon>(m, "VadLexicon")
      .def("__len__", &VadLexicon::size)
      .def_property_readonly("name", &VadLexicon::name)
      .def_readonly("duplicate_count", &VadLexicon::duplicate_count)
      .def_readonly("multiword_count", &VadLexicon::multiword_count)
      .def("lookup", [](const VadLexicon& lex, const std::string& term) {
        const VadScore* hit = lex.lookup(term);
        return hit ? std::optional<VadScore>(*hit) : std::nullopt;
      });

  m.def("load_lexicon", &load_lexicon, py::arg("path"));
  m.def("tokenize", [](const std::string& text) { return tokenize(text); }, py::arg("text"));
  m.def("score_tokens",
        [](const std::vector<Token>& tokens, const VadLexicon& lex) {
          return score_tokens(tokens, lex);
        },
        py::arg("tokens"), py::arg("lexicon"));
  m.def("coverage",
        [](const std::vector<Token>& tokens, const VadLexicon& lex) {
          return coverage(tokens, lex);
        },
        py::arg("tokens"), py::arg("lexicon"));

  // --- arcs -----------------------------------------------------------------
  py::class_<ArcSample>(m, "ArcSample")
      .def_readonly("window_start", &ArcSample::window_start)
      .def_readonly("value", &ArcSample::value);

  py::class_<EmotionArc>(m, "EmotionArc")
      .def_readonly("dimension", &EmotionArc::dimension)
      .def_readonly("window", &EmotionArc::window)
      .def_readonly("step", &EmotionArc::step)
      .def_readonly("samples", &EmotionArc::samples)
      .def_readonly("covered_window_count", &EmotionArc::covered_window_count)
      .def_readonly("skipped_window_count", &EmotionArc::skipped_window_count)
      .def("values", &EmotionArc::values);

  m.def("compute_arc",
        [](const std::vector<ScoredToken>& tokens, Dimension dim, int window, int step) {
          return compute_arc(tokens, dim, window, step);
        },
        py::arg("scored_tokens"), py::arg("dimension"), py::arg("window") = 10,
        py::arg("step") = 1);
  m.def("compute_arc",
        [](const std::vector<Token>& tokens, const VadLexicon& lex, Dimension dim, int window,
           int step) { return compute_arc(tokens, lex, dim, window, step); },
        py::arg("tokens"), py::arg("lexicon"), py::arg("dimension"), py::arg("window") = 10,
        py::arg("step") = 1);
  m.def("arcs_for_dialogue", &arcs_for_dialogue, py::arg("dialogue"), py::arg("lexicon"),
        py::arg("who"), py::arg("window") = 10, py::arg("step") = 1);

  // --- ued --------------------------------------------------------------------
  py::class_<HomeBase>(m, "HomeBase")
      .def_readonly("mean", &HomeBase::mean)
      .def_readonly("sd", &HomeBase::sd)
      .def_readonly("k", &HomeBase::k)
      .def_readonly("low", &HomeBase::low)
      .def_readonly("high", &HomeBase::high);

  py::enum_<Direction>(m, "Direction")
      .value("High", Direction::High)
      .value("Low", Direction::Low);

  py::class_<Displacement>(m, "Displacement")
      .def_readonly("direction", &Displacement::direction)
      .def_readonly("start_idx", &Displacement::start_idx)
      .def_readonly("peak_idx", &Displacement::peak_idx)
      .def_readonly("end_idx", &Displacement::end_idx)
      .def_readonly("peak_distance", &Displacement::peak_distance)
      .def_readonly("length", &Displacement::length)
      .def_readonly("rise_steps", &Displacement::rise_steps)
      .def_readonly("recovery_steps", &Displacement::recovery_steps)
      .def_readonly("complete", &Displacement::complete)
      .def("rise_rate", &Displacement::rise_rate)
      .def("recovery_rate", &Displacement::recovery_rate);

  py::class_<UedMetrics>(m, "UedMetrics")
      .def_readonly("emo_mean", &UedMetrics::emo_mean)
      .def_readonly("emo_std", &UedMetrics::emo_std)
      .def_readonly("avg_peak_dist", &UedMetrics::avg_peak_dist)
      .def_readonly("avg_disp_length", &UedMetrics::avg_disp_length)
      .def_readonly("rise_rate", &UedMetrics::rise_rate)
      .def_readonly("recovery_rate", &UedMetrics::recovery_rate)
      .def_readonly("low_peak_dist", &UedMetrics::low_peak_dist)
      .def_readonly("low_disp_length", &UedMetrics::low_disp_length)
      .def_readonly("low_rise_rate", &UedMetrics::low_rise_rate)
      .def_readonly("low_recovery_rate", &UedMetrics::low_recovery_rate)
      .def_readonly("high_peak_dist", &UedMetrics::high_peak_dist)
      .def_readonly("high_disp_length", &UedMetrics::high_disp_length)
      .def_readonly("high_rise_rate", &UedMetrics::high_rise_rate)
      .def_readonly("high_recovery_rate", &UedMetrics::high_recovery_rate)
      .def_readonly("low_count", &UedMetrics::low_count)
      .def_readonly("high_count", &UedMetrics::high_count)
      .def_readonly("low_complete", &UedMetrics::low_complete)
      .def_readonly("high_complete", &UedMetrics::high_complete)
      .def("__getitem__", [](const UedMetrics& metrics, const std::string& name) {
        return ued_metric(metrics, name);
      });

  m.attr("UED_METRIC_NAMES") = [] {
    py::list names;
    for (auto n : kUedMetricNames) names.append(std::string(n));
    return names;
  }();

  m.def("home_base", &home_base, py::arg("arc"), py::arg("k") = 1.0);
  m.def("segment_displacements", &segment_displacements, py::arg("arc"), py::arg("home_base"));
  m.def("ued_summary", &ued_summary, py::arg("arc"), py::arg("k") = 1.0);
  m.def("ued_for_dialogue", &ued_for_dialogue, py::arg("dialogue"), py::arg("lexicon"),
        py::arg("who"), py::arg("window") = 10, py::arg("step") = 1, py::arg("k") = 1.0);

  // --- align ---------------------------------------------------------------
  m.def("resample",
        [](const std::vector<double>& values, int n) { return resample(values, n); },
        py::arg("values"), py::arg("n"));
  m.def("resample", [](const EmotionArc& arc, int n) { return resample(arc, n); },
        py::arg("arc"), py::arg("n"));
  m.def("spearman",
        [](const std::vector<double>& x, const std::vector<double>& y) {
          return spearman(x, y);
        },
        py::arg("x"), py::arg("y"));

  py::class_<SimilarityResult>(m, "SimilarityResult")
      .def_readonly("real_id", &SimilarityResult::real_id)
      .def_readonly("synth_id", &SimilarityResult::synth_id)
      .def_readonly("role", &SimilarityResult::role)
      .def("rho", &SimilarityResult::rho_for, py::arg("dimension"));

  m.def("arc_similarity", &arc_similarity, py::arg("real"), py::arg("synth"), py::arg("who"),
        py::arg("lexicon"), py::arg("n") = 100, py::arg("window") = 10, py::arg("step") = 1);

  // --- stats -----------------------------------------------------------------
  py::enum_<PMethod>(m, "PMethod")
      .value("Exact", PMethod::Exact)
      .value("NormalApprox", PMethod::NormalApprox);

  py::class_<TestResult>(m, "TestResult")
      .def_readonly("u", &TestResult::u)
      .def_readonly("p", &TestResult::p)
      .def_readonly("method", &TestResult::method)
      .def_readonly("n1", &TestResult::n1)
      .def_readonly("n2", &TestResult::n2);

  py::class_<EffectSize>(m, "EffectSize")
      .def_readonly("rank_biserial", &EffectSize::rank_biserial);

  py::class_<SubsetOutcome>(m, "SubsetOutcome")
      .def_readonly("test", &SubsetOutcome::test)
      .def_readonly("effect", &SubsetOutcome::effect);

  py::class_<MetricComparison>(m, "MetricComparison")
      .def_readonly("metric", &MetricComparison::metric)
      .def_readonly("dimension", &MetricComparison::dimension)
      .def_readonly("role", &MetricComparison::role)
      .def_readonly("alpha", &MetricComparison::alpha)
      .def_readonly("subsets", &MetricComparison::subsets)
      .def_readonly("significant_fraction", &MetricComparison::significant_fraction)
      .def_readonly("median_p", &MetricComparison::median_p)
      .def_readonly("mean_abs_effect", &MetricComparison::mean_abs_effect);

  m.def("mann_whitney_u",
        [](const std::vector<double>& a, const std::vector<double>& b) {
          return mann_whitney_u(a, b);
        },
        py::arg("a"), py::arg("b"));
  m.def("rank_biserial", &rank_biserial, py::arg("test_result"));
  m.def("compare_groups",
        [](std::string metric, Dimension dim, Who role, const std::vector<double>& real_values,
           const std::vector<std::vector<double>>& synth_subsets, double alpha) {
          return compare_groups(std::move(metric), dim, role, real_values, synth_subsets, alpha);
        },
        py::arg("metric"), py::arg("dimension"), py::arg("role"), py::arg("real_values"),
        py::arg("synth_subsets"), py::arg("alpha") = 0.05);

  // --- report ------------------------------------------------------------------
  py::class_<BoxplotSummary>(m, "BoxplotSummary")
      .def_readonly("q1", &BoxplotSummary::q1)
      .def_readonly("median", &BoxplotSummary::median)
      .def_readonly("q3", &BoxplotSummary::q3)
      .def_readonly("whisker_low", &BoxplotSummary::whisker_low)
      .def_readonly("whisker_high", &BoxplotSummary::whisker_high)
      .def_readonly("mean", &BoxplotSummary::mean)
      .def_readonly("outliers", &BoxplotSummary::outliers)
      .def_readonly("n", &BoxplotSummary::n);

  m.def("boxplot_summary",
        [](const std::vector<double>& values) { return boxplot_summary(values); },
        py::arg("values"));

  // --- annotate ------------------------------------------------------------------
  py::class_<TaggerVerdict>(m, "TaggerVerdict")
      .def(py::init([](std::string tagger_id, std::optional<std::string> problem,
                       std::optional<std::string> gender, std::optional<std::string> attitude) {
             TaggerVerdict v;
             v.tagger_id = std::move(tagger_id);
             v.problem = std::move(problem);
             v.gender = std::move(gender);
             v.attitude = std::move(attitude);
             return v;
           }),
           py::arg("tagger_id"), py::arg("problem") = py::none(), py::arg("gender") = py::none(),
           py::arg("attitude") = py::none())
      .def_readwrite("tagger_id", &TaggerVerdict::tagger_id)
      .def_readwrite("problem", &TaggerVerdict::problem)
      .def_readwrite("gender", &TaggerVerdict::gender)
      .def_readwrite("attitude", &TaggerVerdict::attitude);

  py::enum_<VoteStatus>(m, "VoteStatus")
      .value("Won", VoteStatus::Won)
      .value("Tie", VoteStatus::Tie)
      .value("NoVotes", VoteStatus::NoVotes);

  py::class_<AttributeVote>(m, "AttributeVote")
      .def_readonly("status", &AttributeVote::status)
      .def_readonly("winner", &AttributeVote::winner)
      .def_readonly("counts", &AttributeVote::counts);

  py::class_<VoteOutcome>(m, "VoteOutcome")
      .def_readonly("problem", &VoteOutcome::problem)
      .def_readonly("gender", &VoteOutcome::gender)
      .def_readonly("attitude", &VoteOutcome::attitude);

  m.def("majority_vote", &majority_vote, py::arg("verdicts"));
  m.def("audit_against_gold", &audit_against_gold, py::arg("annotated"), py::arg("gold"),
        py::arg("sample_fraction"), py::arg("seed"));
}
