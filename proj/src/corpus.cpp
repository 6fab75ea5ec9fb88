#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "parallel.hpp"
#include "subcount/classify.hpp"
#include "subcount/constructors.hpp"
#include "subcount/errors.hpp"
#include "subcount/group_spec.hpp"
#include "subcount/numtheory.hpp"
#include "subcount/verifier.hpp"

namespace subcount {

namespace {

// Mixed families beyond the single-atom ones; filtered by max_order.
constexpr const char* kSampleSpecs[] = {
    "Z(2) x Z(2)",
    "Z(2) x Z(2) x Z(2)",
    "Z(2) x Z(2) x Z(2) x Z(2)",
    "Z(2) x Z(4)",
    "Z(2) x Z(8)",
    "Z(4) x Z(4)",
    "Z(2) x Z(2) x Z(3)",
    "Z(3) x Z(3)",
    "Z(3) x Z(9)",
    "Z(3) x Z(3) x Z(3)",
    "Z(5) x Z(5)",
    "Z(2) x Z(6) x Z(5)",
    "S(3) x Z(4)",
    "S(3) x Z(5)",
    "S(3) x Z(9)",
    "S(3) x S(3)",
    "S(3) x Z(5) x Z(7)",
    "A(4) x Z(2)",
    "A(4) x Z(3)",
    "A(4) x Z(4)",
    "A(4) x Z(5)",
    "A(4) x Z(5) x Z(7)",
    "A(4) x Z(7)",
    "A(4) x S(3)",
    "S(4) x Z(2)",
    "S(4) x Z(5)",
    "A(5) x Z(2)",
    "A(5) x Z(3)",
    "A(5) x Z(4)",
    "A(5) x Z(7)",
    "D(4) x Z(3)",
    "D(4) x Z(2)",
    "Q(8) x Z(2)",
    "Q(8) x Z(3)",
    "Q(8) x Z(5)",
    "SL(2,3)",
    "SL(2,3) x Z(5)",
    "SL(2,5)",
    "SL(2,7)",
    "SD(3,4,2)",
    "SD(3,8,2)",
    "SD(5,4,2)",
    "SD(5,8,2)",
    "SD(7,4,6)",
    "SD(7,9,2)",
    "SD(9,2,8)",
    "SD(9,4,8)",
    "SD(13,4,5)",
    "SD(25,4,7)",
    "SD(27,2,26)",
    "SD(7,3,2) x Z(4)",
    "SD(9,2,8) x Z(5)",
    "SD(3,4,2) x Z(5)",
};

struct Pending {
  std::string source;
  std::uint64_t order; // 0 when unknown before construction
  std::function<Group()> make;
  bool requested = false; // named by spec_list or ingest_paths
};

std::uint64_t spec_order(const GroupSpecAST& ast)
{
  std::uint64_t order = 1;
  for (auto const& a : ast.factors) {
    std::uint64_t o = 0;
    switch (a.kind) {
    case AtomKind::Cyclic: o = a.args[0]; break;
    case AtomKind::Dihedral: o = 2 * a.args[0]; break;
    case AtomKind::Quaternion: o = a.args[0]; break;
    case AtomKind::Symmetric:
    case AtomKind::Alternating: {
      o = 1;
      for (std::uint64_t i = 2; i <= std::min<std::uint64_t>(a.args[0], 20); ++i)
        o *= i;
      if (a.kind == AtomKind::Alternating && a.args[0] >= 2)
        o /= 2;
      break;
    }
    case AtomKind::SL2: o = a.args[0] * (a.args[0] * a.args[0] - 1); break;
    case AtomKind::PSL2: o = a.args[0] >= 2 ? psl2_order(a.args[0]) : 0; break;
    case AtomKind::Semidirect: o = a.args[0] * a.args[1]; break;
    }
    order *= o;
  }
  return order;
}

} // namespace

Corpus build_corpus(const CorpusConfig& cfg)
{
  const Caps caps = cfg.caps;
  const std::uint64_t max_order = std::min<std::uint64_t>(cfg.max_order, caps.order);
  std::vector<Pending> pending;
  Corpus corpus;

  auto add_spec = [&](const std::string& text, bool filter, bool requested = false) {
    GroupSpecAST ast;
    try {
      ast = parse_group_spec(text);
    } catch (const Error& e) {
      corpus.errors.push_back({text, e.what()});
      return;
    }
    std::uint64_t order = spec_order(ast);
    if (filter && order > max_order)
      return;
    pending.push_back({text, order, [ast, caps] { return build(ast, caps); }, requested});
  };

  pending.push_back({"trivial", 1, [caps] { return cyclic(1, caps); }});

  for (std::uint64_t n = 2; n <= max_order; ++n) {
    if (cfg.include_squarefree_enumeration && is_squarefree(n))
      continue;
    pending.push_back({"Z(" + std::to_string(n) + ")", n, [n, caps] { return cyclic(n, caps); }});
  }
  for (std::uint64_t n = 2; 2 * n <= max_order; ++n)
    pending.push_back({"D(" + std::to_string(n) + ")", 2 * n, [n, caps] { return dihedral(n, caps); }});
  for (std::uint64_t q = 8; q <= max_order; q *= 2)
    pending.push_back({"Q(" + std::to_string(q) + ")", q, [q, caps] { return generalized_quaternion(q, caps); }});
  for (std::uint64_t n = 3; n <= 6; ++n)
    add_spec("S(" + std::to_string(n) + ")", true);
  for (std::uint64_t n = 4; n <= 6; ++n)
    add_spec("A(" + std::to_string(n) + ")", true);
  for (std::uint64_t q = 3; q <= cfg.psl_max_q; ++q)
    if (prime_power_decompose(q))
      add_spec("PSL(2," + std::to_string(q) + ")", false);
  for (auto spec : kSampleSpecs)
    add_spec(spec, true);

  std::vector<std::vector<Group>> squarefree;
  std::vector<std::uint64_t> squarefree_n;
  if (cfg.include_squarefree_enumeration)
    for (std::uint64_t n = 2; n <= max_order; ++n)
      if (is_squarefree(n))
        squarefree_n.push_back(n);

  for (auto const& text : cfg.spec_list)
    add_spec(text, false, true);
  for (auto const& path : cfg.ingest_paths)
    pending.push_back({path, 0, [path, caps] { return load_group_file(path, caps); }, true});

  std::vector<std::optional<Group>> built(pending.size());
  std::vector<std::string> failures(pending.size());
  squarefree.resize(squarefree_n.size());
  std::vector<std::string> squarefree_failures(squarefree_n.size());

  const std::size_t total = pending.size() + squarefree_n.size();
  detail::parallel_for(total, cfg.jobs, [&](std::size_t i) {
    try {
      if (i < pending.size())
        built[i].emplace(pending[i].make());
      else
        squarefree[i - pending.size()] = squarefree_groups(squarefree_n[i - pending.size()], caps);
    } catch (const std::exception& e) {
      (i < pending.size() ? failures[i] : squarefree_failures[i - pending.size()]) = e.what();
    }
  });

  struct Candidate {
    GroupPtr group;
    bool requested;
  };
  std::vector<Candidate> groups;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    if (built[i])
      groups.push_back({std::make_shared<const Group>(std::move(*built[i])), pending[i].requested});
    else
      corpus.errors.push_back({pending[i].source, failures[i]});
  }
  for (std::size_t i = 0; i < squarefree_n.size(); ++i) {
    if (!squarefree_failures[i].empty()) {
      corpus.errors.push_back({"squarefree order " + std::to_string(squarefree_n[i]), squarefree_failures[i]});
      continue;
    }
    for (auto& g : squarefree[i])
      groups.push_back({std::make_shared<const Group>(std::move(g)), false});
  }

  // Within an order, requested groups come first, then groups carrying a
  // semidirect decomposition, then by name; the first of each isomorphism
  // class is kept.
  auto rank = [](const Candidate& c) { return c.requested ? 0 : c.group->semidirect() ? 1 : 2; };
  std::stable_sort(groups.begin(), groups.end(), [&](const Candidate& a, const Candidate& b) {
    if (a.group->order() != b.group->order())
      return a.group->order() < b.group->order();
    if (rank(a) != rank(b))
      return rank(a) < rank(b);
    return a.group->name() < b.group->name();
  });
  std::set<std::string> seen;
  std::vector<GroupPtr> named;
  for (auto& c : groups)
    if (seen.insert(c.group->name()).second)
      named.push_back(std::move(c.group));

  Caps cheap = caps;
  cheap.lattice = 0;
  std::vector<IsoFingerprint> prints(named.size());
  detail::parallel_for(named.size(), cfg.jobs, [&](std::size_t i) { prints[i] = iso_fingerprint(*named[i], cheap); });
  // The earliest isomorphic group is never itself a duplicate, so each
  // index can be decided independently.
  std::vector<std::optional<std::size_t>> kept_as(named.size());
  detail::parallel_for(named.size(), cfg.jobs, [&](std::size_t i) {
    if (named[i]->order() > caps.isomorphism)
      return;
    std::size_t j = i;
    while (j > 0 && named[j - 1]->order() == named[i]->order())
      --j;
    for (; j < i; ++j)
      if (prints[j].compatible(prints[i]) && find_isomorphism(*named[j], *named[i])) {
        kept_as[i] = j;
        return;
      }
  });
  for (std::size_t i = 0; i < named.size(); ++i) {
    if (kept_as[i])
      corpus.duplicates.push_back({named[i]->name(), named[*kept_as[i]]->name()});
    else
      corpus.groups.push_back(named[i]);
  }
  std::stable_sort(corpus.groups.begin(), corpus.groups.end(), [](const GroupPtr& a, const GroupPtr& b) {
    return a->order() != b->order() ? a->order() < b->order() : a->name() < b->name();
  });
  return corpus;
}

CorpusRecords compute_records(const Corpus& corpus, const Caps& caps, unsigned jobs)
{
  const std::size_t n = corpus.groups.size();
  std::vector<std::optional<InvariantRecord>> slots(n);
  std::vector<std::string> failures(n);
  detail::parallel_for(n, jobs, [&](std::size_t i) {
    try {
      slots[i] = invariant_record(*corpus.groups[i], caps);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  });

  CorpusRecords out;
  out.errors = corpus.errors;
  out.jobs = jobs;
  for (std::size_t i = 0; i < n; ++i) {
    if (slots[i]) {
      out.groups.push_back(corpus.groups[i]);
      out.records.push_back(std::move(*slots[i]));
    } else {
      out.errors.push_back({corpus.groups[i]->name(), failures[i]});
    }
  }
  return out;
}

VerdictReport corpus_error_report(const CorpusRecords& data)
{
  VerdictReport r;
  r.check_id = "CORPUS";
  r.groups_checked = data.groups.size();
  for (auto const& e : data.errors)
    r.violations.push_back({e.source, e.message});
  r.status = r.violations.empty() ? Status::Pass : Status::Fail;
  r.notes = std::to_string(data.groups.size()) + " groups built and recorded";
  return r;
}

} // namespace subcount
