#include "adt/saturation/saturation.hpp"

#include <algorithm>

namespace adt {

const char* toString(SaturationStatus s) {
  switch (s) {
    case SaturationStatus::Running:
      return "Running";
    case SaturationStatus::Unsatisfiable:
      return "Unsatisfiable";
    case SaturationStatus::Saturated:
      return "Saturated";
    case SaturationStatus::ResourceOut:
      return "ResourceOut";
  }
  return "?";
}

Saturation::Saturation(const Signature& sig, ProverConfig cfg)
    : sig_(&sig), cfg_(cfg), ord_(sig), simplifier_(ord_, cfg.ta) {}

void Saturation::start() {
  if (started_) return;
  started_ = true;
  auto budget = std::chrono::duration<double>(std::max(0.0, cfg_.timeLimit));
  deadline_ = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget);
}

ClausePtr Saturation::record(std::vector<Literal> literals, std::string rule, std::vector<ClauseId> premises,
                             bool theoryAxiom) {
  auto c = std::make_shared<Clause>();
  c->literals = std::move(literals);
  c->id = clauses_.size() + 1;
  c->rule = std::move(rule);
  std::uint32_t age = 0;
  for (ClauseId p : premises) age = std::max(age, clause(p)->age + 1);
  c->age = age;
  c->premises = std::move(premises);
  c->theoryAxiom = theoryAxiom;
  clauses_.push_back(c);
  ++stats_.generated;
  if (c->empty() && status_ == SaturationStatus::Running) {
    status_ = SaturationStatus::Unsatisfiable;
    refutation_ = c->id;
  }
  return c;
}

void Saturation::notify(const Inference& inf) {
  if (observer_) observer_(inf);
}

void Saturation::addInput(const std::vector<Clause>& clauses) {
  // A zero budget does no work at all, input simplification included.
  if (cfg_.timeLimit <= 0 && status_ == SaturationStatus::Running) status_ = SaturationStatus::ResourceOut;
  for (const Clause& in : clauses) {
    if (status_ != SaturationStatus::Running) return;
    admit(record(normalizeVariables(in.literals), in.rule, {}, in.theoryAxiom));
  }
}

bool Saturation::subsumedByStored(const Clause& c) const {
  SubsumptionKey key = SubsumptionKey::of(c.literals);
  for (const Entry& e : active_) {
    if (e.key.mayCover(key) && subsumes(e.clause->literals, c.literals)) return true;
  }
  for (const auto& [id, e] : passive_) {
    if (id != c.id && e.key.mayCover(key) && subsumes(e.clause->literals, c.literals)) return true;
  }
  return false;
}

std::vector<ClausePtr> Saturation::simplify(ClausePtr c, bool consequences) {
  std::vector<ClausePtr> out;
  std::vector<ClausePtr> work{std::move(c)};
  while (!work.empty() && status_ == SaturationStatus::Running) {
    ClausePtr x = std::move(work.back());
    work.pop_back();
    SimplificationStep s = simplifier_.step(x->literals, x->theoryAxiom);
    if (s.kind == SimplificationStep::Kind::Delete) {
      ++stats_.deleted;
      if (s.rule == std::string_view(rules::kTautology)) {
        ++stats_.tautologies;
      } else {
        ++stats_.theorySteps;
      }
      continue;
    }
    if (s.kind == SimplificationStep::Kind::Replace) {
      ++stats_.simplified;
      for (auto& lits : s.conclusions) {
        Inference inf;
        inf.rule = s.rule;
        inf.premises = {x->id};
        inf.conclusion = lits;
        notify(inf);
        work.push_back(record(normalizeVariables(lits), s.rule, {x->id}));
      }
      continue;
    }
    if (consequences) {
      if (auto extra = simplifier_.injectivityConsequence(x->literals, x->theoryAxiom)) {
        ++stats_.inferences;
        ++stats_.theorySteps;
        Inference inf;
        inf.rule = rules::kInjectivityNegative;
        inf.premises = {x->id};
        inf.conclusion = *extra;
        notify(inf);
        work.push_back(record(normalizeVariables(*extra), rules::kInjectivityNegative, {x->id}));
      }
    }
    if (subsumedByStored(*x)) {
      ++stats_.deleted;
      ++stats_.forwardSubsumed;
      continue;
    }
    out.push_back(std::move(x));
  }
  return out;
}

void Saturation::admit(ClausePtr c) {
  if (status_ != SaturationStatus::Running) return;
  for (ClausePtr& s : simplify(std::move(c), true)) {
    if (status_ != SaturationStatus::Running) return;
    Entry e{s, SubsumptionKey::of(s->literals), {}};
    byWeight_.emplace(s->weight(), s->id);
    passive_.emplace(s->id, std::move(e));
  }
}

void Saturation::backwardSubsume(const Clause& given) {
  SubsumptionKey key = SubsumptionKey::of(given.literals);
  auto subsumed = [&](const Entry& e) {
    return key.mayCover(e.key) && subsumes(given.literals, e.clause->literals);
  };
  auto before = active_.size();
  std::erase_if(active_, subsumed);
  std::uint64_t removed = before - active_.size();
  for (auto it = passive_.begin(); it != passive_.end();) {
    if (subsumed(it->second)) {
      byWeight_.erase({it->second.clause->weight(), it->first});
      it = passive_.erase(it);
      ++removed;
    } else {
      ++it;
    }
  }
  stats_.backwardSubsumed += removed;
  stats_.deleted += removed;
}

bool Saturation::outOfResources() {
  if (clauses_.size() >= cfg_.clauseLimit) return true;
  return std::chrono::steady_clock::now() >= deadline_;
}

void Saturation::addInference(Inference inf) {
  ++stats_.inferences;
  if ((++tick_ & 63) == 0 && outOfResources()) {
    status_ = SaturationStatus::ResourceOut;
    return;
  }
  notify(inf);
  ClausePtr c = record(normalizeVariables(inf.conclusion), inf.rule, inf.premises);
  admit(std::move(c));
}

ClausePtr Saturation::pickGiven() {
  const std::uint64_t cycle = cfg_.ageRatio + cfg_.weightRatio;
  const bool byAge = cycle == 0 || picks_ % cycle < cfg_.ageRatio;
  ++picks_;
  ClauseId id = byAge ? passive_.begin()->first : byWeight_.begin()->second;
  auto it = passive_.find(id);
  ClausePtr c = it->second.clause;
  lastGiven_ = id;
  byWeight_.erase({c->weight(), id});
  passive_.erase(it);
  return c;
}

void Saturation::activate(ClausePtr given) {
  std::vector<ClausePtr> survivors = simplify(given, false);
  if (status_ != SaturationStatus::Running) return;
  if (survivors.size() != 1 || survivors.front() != given) {
    for (ClausePtr& s : survivors) {
      Entry e{s, SubsumptionKey::of(s->literals), {}};
      byWeight_.emplace(s->weight(), s->id);
      passive_.emplace(s->id, std::move(e));
    }
    return;
  }
  backwardSubsume(*given);
  ++stats_.activations;
  active_.push_back(Entry{given, SubsumptionKey::of(given->literals), withSelection(*given, ord_)});
  const SelectedClause& sel = active_.back().selected;

  std::vector<Inference> infs;
  equalityResolve(sel, ord_, infs);
  factor(sel, ord_, infs);
  for (const Entry& a : active_) generateBinary(sel, a.selected, ord_, infs);
  if (cfg_.ta.acyclicity == AcyclicityMode::Rules) {
    for (Inference& inf : acycGenerate(*given, *sig_)) infs.push_back(std::move(inf));
  }
  for (Inference& inf : infs) {
    addInference(std::move(inf));
    if (status_ != SaturationStatus::Running) return;
  }
}

SaturationStatus Saturation::step() {
  if (status_ != SaturationStatus::Running) return status_;
  start();
  if (outOfResources()) {
    status_ = SaturationStatus::ResourceOut;
    return status_;
  }
  if (passive_.empty()) {
    status_ = SaturationStatus::Saturated;
    return status_;
  }
  activate(pickGiven());
  return status_;
}

SaturationStatus Saturation::run() {
  start();
  while (step() == SaturationStatus::Running) {
  }
  return status_;
}

std::vector<ClausePtr> Saturation::activeClauses() const {
  std::vector<ClausePtr> out;
  for (const Entry& e : active_) out.push_back(e.clause);
  return out;
}

std::vector<ClausePtr> Saturation::proof() const {
  if (status_ != SaturationStatus::Unsatisfiable) return {};
  std::set<ClauseId> seen{refutation_};
  std::vector<ClauseId> stack{refutation_};
  while (!stack.empty()) {
    ClauseId id = stack.back();
    stack.pop_back();
    for (ClauseId p : clause(id)->premises) {
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  std::vector<ClausePtr> out;
  for (ClauseId id : seen) out.push_back(clause(id));
  return out;
}

SaturationStatus saturate(const std::vector<Clause>& input, const Signature& sig, const ProverConfig& cfg) {
  Saturation s(sig, cfg);
  s.addInput(generateAxioms(sig, cfg.ta));
  s.addInput(input);
  return s.run();
}

const char* toString(DecideResult r) {
  switch (r) {
    case DecideResult::Theorem:
      return "Theorem";
    case DecideResult::NonTheorem:
      return "NonTheorem";
    case DecideResult::ResourceOut:
      return "ResourceOut";
  }
  return "?";
}

DecideReport decide(const Formula& f, const Signature& sig, const ProverConfig& cfg) {
  ProverConfig c = cfg;
  c.ta.acyclicity = AcyclicityMode::Axioms;

  Signature negSig = sig;
  Signature posSig = sig;
  negSig.finalizeDatatypes();
  posSig.finalizeDatatypes();
  std::vector<Clause> negClauses = clausify(negate(f), negSig);
  std::vector<Clause> posClauses = clausify(f, posSig);

  Saturation neg(negSig, c);
  Saturation pos(posSig, c);
  neg.start();
  pos.start();
  neg.addInput(generateAxioms(negSig, c.ta));
  neg.addInput(negClauses);
  pos.addInput(generateAxioms(posSig, c.ta));
  pos.addInput(posClauses);

  DecideReport report;
  auto finish = [&](DecideResult r, const Saturation* winner, const Signature* winnerSig) {
    report.result = r;
    report.negatedSide = neg.statistics();
    report.positiveSide = pos.statistics();
    if (winner) {
      report.proof = winner->proof();
      report.proofSignature = *winnerSig;
    }
    return report;
  };
  while (true) {
    if (neg.status() == SaturationStatus::Running) neg.step();
    if (neg.status() == SaturationStatus::Unsatisfiable) return finish(DecideResult::Theorem, &neg, &negSig);
    if (pos.status() == SaturationStatus::Running) pos.step();
    if (pos.status() == SaturationStatus::Unsatisfiable) return finish(DecideResult::NonTheorem, &pos, &posSig);
    if (neg.status() != SaturationStatus::Running && pos.status() != SaturationStatus::Running) {
      return finish(DecideResult::ResourceOut, nullptr, nullptr);
    }
  }
}

}  // namespace adt
