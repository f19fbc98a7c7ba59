"""Property suite over an enumerated corpus.

Every lemma is a function that walks part of a prebuilt ``Corpus`` and records
one case per check with a ``Recorder``. Failures are data: they end up in the
``SuiteReport`` with a printed reproducer instead of being raised.
"""
import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from lamkernel.models.corpus import CorpusConfig
from lamkernel.models.graph import GraphSummary, ReductionGraph
from lamkernel.models.report import Failure, LemmaResult, SuiteReport
from lamkernel.models.step import RuleTag
from lamkernel.models.term import (
    REC, SUCC, ZERO, Abs, App, Const, Term, Var, VarRef, apply, lam, v,
)
from lamkernel.models.types import NAT, Arrow, Context, MetaType, SimpleType, metas_of
from lamkernel.utils.alpha import alpha_eq
from lamkernel.utils.corpus import enumerate_terms, enumerate_typed_closed, random_substitutions
from lamkernel.utils.errors import FuelExhausted, TypingError
from lamkernel.utils.normalization import count_succ, denumeral, explore, normalize, numeral
from lamkernel.utils.parser import parse_term
from lamkernel.utils.printer import LAMBDA, print_term
from lamkernel.utils.reduction import (
    RuleSet, beta_rules, check_comm_alpha, check_compat_subst, check_preserves_fresh, is_neutral,
    neutral_head_check, one_step_reducts, reducts_by_context, step_is_sound, systemt_rules,
)
from lamkernel.utils.substitution import (
    Subst, choose_fresh, identity, restriction_fresh, subst, subst1, update,
)
from lamkernel.utils.syntax import free_vars, is_fresh, occurs_free, spine, subterm_at
from lamkernel.utils.type_checker import (
    check, check_derivation, infer, infer_derivation, substitute_metas,
)

logger = logging.getLogger(__name__)

RULE_SETS = (beta_rules, systemt_rules)

OMEGA = App(lam(0, App(v(0), v(0))), lam(0, App(v(0), v(0))))

# add = \m. \n. Rec m (\k. \r. S r) n
ADD = lam(0, lam(1, apply(REC, v(0), lam(2, lam(3, App(SUCC, v(3)))), v(1))))
# mult = \m. \n. Rec 0 (\k. \r. add m r) n
MULT = lam(0, lam(1, apply(REC, ZERO, lam(2, lam(3, apply(ADD, v(0), v(3)))), v(1))))


def _nameless(term: Term, bound: Tuple[Var, ...] = ()):
    """Binder-free shape of ``term``; equal exactly for alpha-convertible terms."""
    if isinstance(term, VarRef):
        if term.var in bound:
            return "b", bound.index(term.var)
        return "f", term.var.index
    if isinstance(term, Const):
        return "c", str(term.symbol)
    if isinstance(term, Abs):
        return "l", _nameless(term.body, (term.var,) + bound)
    return "a", _nameless(term.fun, bound), _nameless(term.arg, bound)


def _alpha_classes(terms: Iterable[Term]) -> List[List[Term]]:
    classes: Dict[tuple, List[Term]] = {}
    for term in terms:
        classes.setdefault(_nameless(term), []).append(term)
    return list(classes.values())


class Corpus:
    """The terms, typed terms and substitutions one suite run works on."""

    def __init__(self, cfg: CorpusConfig):
        self.cfg = cfg
        self.calculus = cfg.calculus
        self.terms: List[Term] = list(enumerate_terms(cfg))
        self.atoms: List[Term] = list(enumerate_terms(cfg, 1))
        self.images: List[Term] = list(enumerate_terms(cfg, cfg.image_size))
        self.substitutions: List[Subst] = random_substitutions(cfg, cfg.variable_pool)
        self.typed: List[Tuple[Term, SimpleType]] = list(enumerate_typed_closed(cfg))
        self.alpha_classes = _alpha_classes(self.terms)
        self.typed_alpha_classes = _alpha_classes(term for term, _ in self.typed)
        self._summaries: Dict[Tuple[str, Term], GraphSummary] = {}
        self._lock = threading.Lock()
        logger.info("Corpus ready: %d terms, %d typed, %d substitutions",
                    len(self.terms), len(self.typed), len(self.substitutions))

    @property
    def rules(self) -> RuleSet:
        return self.calculus.rules

    def explore(self, term: Term, rules: Optional[RuleSet] = None) -> ReductionGraph:
        """Explore ``term`` afresh; only its summary is kept."""
        rules = rules or self.rules
        g = explore(rules, term, self.cfg.node_budget)
        with self._lock:
            self._summaries.setdefault((rules.name, term), g.summary())
        return g

    def summary(self, term: Term, rules: Optional[RuleSet] = None) -> GraphSummary:
        rules = rules or self.rules
        with self._lock:
            cached = self._summaries.get((rules.name, term))
        if cached is not None:
            return cached
        return self.explore(term, rules).summary()


class Recorder:
    """Counts cases for one lemma and keeps the first few failures."""

    def __init__(self, name: str, limit: int):
        self.result = LemmaResult(name)
        self.limit = limit

    def check(self, ok: bool, case: Union[str, Callable[[], str]], detail: str = "") -> bool:
        self.result.cases += 1
        if not ok:
            self.result.failure_count += 1
            if len(self.result.failures) < self.limit:
                self.result.failures.append(Failure(case() if callable(case) else case, detail))
        return ok


LemmaFn = Callable[[Corpus, Recorder], None]
LEMMAS: Dict[str, LemmaFn] = {}


def lemma(name: str, per_rule_set: bool = False):
    """Register a lemma; ``per_rule_set`` registers ``name[beta]`` and ``name[systemt]``."""
    def register(fn):
        if per_rule_set:
            for rules in RULE_SETS:
                LEMMAS[f"{name}[{rules.name}]"] = partial(fn, rules=rules)
        else:
            LEMMAS[name] = fn
        return fn
    return register


def _show(term: Term) -> str:
    return print_term(term)


def _show_subst(sigma: Subst) -> str:
    return "[" + ", ".join(f"{x}:={_show(t)}" for x, t in sigma.overrides()) + "]"


# -- syntax -----------------------------------------------------------------

@lemma("free_vars")
def check_free_vars(corpus: Corpus, rec: Recorder) -> None:
    for term in corpus.terms:
        fv = free_vars(term)
        rec.check(len(fv) == len(set(fv)), lambda: _show(term), "duplicate free variable")
        for x in corpus.cfg.variable_pool:
            free = occurs_free(x, term)
            rec.check(free != is_fresh(x, term) and free == (x in fv),
                      lambda: f"{x} in {_show(term)}", "free/fresh disagree")


@lemma("spine_roundtrip")
def check_spine_roundtrip(corpus: Corpus, rec: Recorder) -> None:
    for term in corpus.terms:
        head, args = spine(term)
        rec.check(not isinstance(head, App) and apply(head, *args) == term, lambda: _show(term))


# -- substitution -----------------------------------------------------------

@lemma("fresh_choice")
def check_fresh_choice(corpus: Corpus, rec: Recorder) -> None:
    for term in corpus.terms:
        for sigma in corpus.substitutions:
            y = choose_fresh(sigma, term)
            rec.check(restriction_fresh(y, sigma, term),
                      lambda: f"{_show(term)} {_show_subst(sigma)}", f"{y} not fresh")


@lemma("capture_avoidance")
def check_capture_avoidance(corpus: Corpus, rec: Recorder) -> None:
    for term in corpus.terms:
        if not isinstance(term, Abs):
            continue
        for sigma in corpus.substitutions:
            y = choose_fresh(sigma, term)
            for w in free_vars(term):
                rec.check(is_fresh(y, sigma(w)),
                          lambda: f"{_show(term)} {_show_subst(sigma)}", f"{y} captured by image of {w}")


@lemma("subst_free_vars")
def check_subst_free_vars(corpus: Corpus, rec: Recorder) -> None:
    for term in corpus.terms:
        for sigma in corpus.substitutions:
            expected = set()
            for x in free_vars(term):
                expected.update(free_vars(sigma(x)))
            result = subst(term, sigma)
            rec.check(set(free_vars(result)) == expected,
                      lambda: f"{_show(term)} {_show_subst(sigma)}",
                      f"got {_show(result)}")


# -- alpha ------------------------------------------------------------------

@lemma("alpha_identity")
def check_alpha_identity(corpus: Corpus, rec: Recorder) -> None:
    for term in corpus.terms:
        rec.check(alpha_eq(term, subst(term, identity())), lambda: _show(term))


@lemma("alpha_equivalence")
def check_alpha_equivalence(corpus: Corpus, rec: Recorder) -> None:
    previous: Optional[Term] = None
    for members in corpus.alpha_classes:
        head = members[0]
        rec.check(alpha_eq(head, head), lambda: _show(head), "not reflexive")
        if previous is not None:
            rec.check(not alpha_eq(previous, head),
                      lambda: f"{_show(previous)} ~ {_show(head)}", "distinct shapes identified")
        for before, member in zip(members, members[1:]):
            rec.check(alpha_eq(head, member) and alpha_eq(member, head),
                      lambda: f"{_show(head)} ~ {_show(member)}", "not symmetric")
            rec.check(alpha_eq(before, member),
                      lambda: f"{_show(before)} ~ {_show(member)}", "not transitive")
        previous = head


@lemma("alpha_free_vars")
def check_alpha_free_vars(corpus: Corpus, rec: Recorder) -> None:
    for members in corpus.alpha_classes:
        expected = set(free_vars(members[0]))
        for member in members[1:]:
            rec.check(set(free_vars(member)) == expected,
                      lambda: f"{_show(members[0])} ~ {_show(member)}")


@lemma("subst_lemma")
def check_subst_lemma(corpus: Corpus, rec: Recorder) -> None:
    pool, images = corpus.cfg.variable_pool, corpus.images
    for i, body in enumerate(corpus.terms):
        for j, sigma in enumerate(corpus.substitutions):
            x = pool[(i + j) % len(pool)]
            replacement = images[(i * len(corpus.substitutions) + j) % len(images)]
            y = choose_fresh(sigma, Abs(x, body))
            left = subst1(subst(body, update(sigma, x, VarRef(y))), replacement, y)
            right = subst(body, update(sigma, x, replacement))
            rec.check(alpha_eq(left, right),
                      lambda: f"{_show(body)} {_show_subst(sigma)} {x}:={_show(replacement)}",
                      f"{_show(left)} vs {_show(right)}")


# -- reduction --------------------------------------------------------------

@lemma("preserves_fresh", per_rule_set=True)
def check_preserves_fresh_lemma(corpus: Corpus, rec: Recorder, rules: RuleSet) -> None:
    for term in corpus.terms:
        for step in one_step_reducts(rules, term):
            for x in corpus.cfg.variable_pool:
                rec.check(check_preserves_fresh(rules, x, step),
                          lambda: f"{x} {_show(term)} ~> {_show(step.target)}")


@lemma("compat_subst", per_rule_set=True)
def check_compat_subst_lemma(corpus: Corpus, rec: Recorder, rules: RuleSet) -> None:
    for term in corpus.terms:
        for step in one_step_reducts(rules, term):
            for sigma in corpus.substitutions:
                rec.check(check_compat_subst(rules, step, sigma) is not None,
                          lambda: f"{_show(term)} ~> {_show(step.target)} {_show_subst(sigma)}",
                          f"no reduct of the substituted source matches at {step.label}")


@lemma("comm_alpha", per_rule_set=True)
def check_comm_alpha_lemma(corpus: Corpus, rec: Recorder, rules: RuleSet) -> None:
    for members in corpus.alpha_classes:
        for term in members:
            variants = (members[0], subst(term, identity()))
            for step in one_step_reducts(rules, term):
                for variant in variants:
                    rec.check(check_comm_alpha(rules, variant, step) is not None,
                              lambda: f"{_show(term)} ~> {_show(step.target)} from {_show(variant)}")


@lemma("neutral_heads", per_rule_set=True)
def check_neutral_heads(corpus: Corpus, rec: Recorder, rules: RuleSet) -> None:
    for term in corpus.terms:
        rec.check(neutral_head_check(rules, term), lambda: _show(term))


@lemma("redex_neutral", per_rule_set=True)
def check_redex_neutral(corpus: Corpus, rec: Recorder, rules: RuleSet) -> None:
    atoms = corpus.atoms
    for term in corpus.terms:
        if isinstance(term, App) and isinstance(term.fun, Abs):
            rec.check(is_neutral(rules, term, atoms), lambda: _show(term), "beta redex applied is a redex")
            for arg in atoms:
                rec.check(is_neutral(rules, App(term, arg), atoms),
                          lambda: f"{_show(term)} {_show(arg)}", "neutrality lost under application")
    if rules is systemt_rules:
        for g in atoms:
            for h in atoms:
                for n in atoms:
                    spine_term = apply(REC, g, h, n)
                    rec.check(is_neutral(rules, spine_term, atoms), lambda: _show(spine_term))


@lemma("reduct_soundness", per_rule_set=True)
def check_reduct_soundness(corpus: Corpus, rec: Recorder, rules: RuleSet) -> None:
    for term in corpus.terms:
        for step in one_step_reducts(rules, term):
            rec.check(step_is_sound(rules, step), lambda: f"{_show(term)} {step.label}")


@lemma("reduct_completeness", per_rule_set=True)
def check_reduct_completeness(corpus: Corpus, rec: Recorder, rules: RuleSet) -> None:
    for term in corpus.terms:
        found = {(step.target, step.path) for step in one_step_reducts(rules, term)}
        expected = reducts_by_context(rules, term)
        rec.check(found == expected, lambda: _show(term),
                  f"{len(found - expected)} unexpected, {len(expected - found)} missing")


# -- normalization ----------------------------------------------------------

@lemma("strong_normalization")
def check_strong_normalization(corpus: Corpus, rec: Recorder) -> None:
    for term, t in corpus.typed:
        s = corpus.summary(term)
        rec.check(s.is_finite, lambda: f"{_show(term)} : {t}", f"explore status {s.status}")


@lemma("nontermination_witness")
def check_nontermination_witness(corpus: Corpus, rec: Recorder) -> None:
    g = explore(beta_rules, OMEGA, corpus.cfg.node_budget)
    rec.check(not g.is_finite and len(g.cycle) > 0, lambda: _show(OMEGA), f"explore status {g.status}")
    try:
        infer(corpus.calculus.signature, Context(), OMEGA)
        typed = True
    except TypingError:
        typed = False
    rec.check(not typed, lambda: _show(OMEGA), "self-application was typed")
    rec.check(all(term != OMEGA for term, _ in corpus.typed), lambda: _show(OMEGA), "in typed corpus")


@lemma("v_decrease")
def check_v_decrease(corpus: Corpus, rec: Recorder) -> None:
    for term, _ in corpus.typed:
        g = corpus.explore(term)
        if not g.is_finite:
            continue
        for step in g.edges:
            rec.check(g.heights[step.source] > g.heights[step.target],
                      lambda: f"{_show(step.source)} ~> {_show(step.target)}")


@lemma("v_succ")
def check_v_succ(corpus: Corpus, rec: Recorder) -> None:
    if SUCC.symbol not in corpus.calculus.alphabet:
        return
    for term, t in corpus.typed:
        if t != NAT:
            continue
        s, ss = corpus.summary(term), corpus.summary(App(SUCC, term))
        rec.check(s.is_finite and ss.is_finite and s.height == ss.height,
                  lambda: _show(term), f"v={s.height}, v(S _)={ss.height}")


@lemma("sn_app_inversion")
def check_sn_app_inversion(corpus: Corpus, rec: Recorder) -> None:
    for term, _ in corpus.typed:
        if not isinstance(term, App) or not corpus.summary(term).is_finite:
            continue
        rec.check(corpus.summary(term.fun).is_finite and corpus.summary(term.arg).is_finite,
                  lambda: _show(term))


@lemma("alpha_sn")
def check_alpha_sn(corpus: Corpus, rec: Recorder) -> None:
    for members in corpus.typed_alpha_classes:
        for term in members:
            s = corpus.summary(term)
            if not s.is_finite:
                continue
            for variant in (members[0], subst(term, identity())):
                sv = corpus.summary(variant)
                rec.check(sv.is_finite and sv.height == s.height,
                          lambda: f"{_show(term)} ~ {_show(variant)}")


@lemma("recursion_measure")
def check_recursion_measure(corpus: Corpus, rec: Recorder) -> None:
    """Rec spines: the recursive call drops (v, ℓ) lexicographically and ℓ of normal forms."""
    seen = 0
    limit = corpus.cfg.rec_spine_limit
    rules, fuel = corpus.rules, corpus.cfg.fuel
    for term, _ in corpus.typed:
        if seen >= limit:
            break
        g = corpus.explore(term)
        if not g.is_finite:
            continue
        for step in g.edges:
            if step.tag is not RuleTag.RECS or seen >= limit:
                continue
            seen += 1
            redex = subterm_at(step.source, step.path)
            succ_n = spine(redex)[1][2]
            n = succ_n.arg
            s_n, s_succ_n = corpus.summary(n), corpus.summary(succ_n)
            if not rec.check(s_n.is_finite and s_succ_n.is_finite,
                             lambda: _show(redex), "argument not normalizing"):
                continue
            rec.check((s_n.height, count_succ(n)) < (s_succ_n.height, count_succ(succ_n)),
                      lambda: _show(redex),
                      f"(v, ℓ) went from ({s_succ_n.height}, {count_succ(succ_n)}) "
                      f"to ({s_n.height}, {count_succ(n)})")
            try:
                nf_n = normalize(rules, n, fuel).nf
                nf_succ_n = normalize(rules, succ_n, fuel).nf
            except FuelExhausted:
                rec.check(False, lambda: _show(redex), "argument has no normal form")
                continue
            rec.check(count_succ(nf_n) < count_succ(nf_succ_n),
                      lambda: _show(redex), "successor count of normal forms did not drop")
        for node in g.nodes:
            head, args = spine(node)
            if head != REC or len(args) != 3 or seen >= limit:
                continue
            seen += 1
            gn = corpus.explore(args[2])
            if not rec.check(gn.is_finite, lambda: _show(node), "argument not normalizing"):
                continue
            for step in gn.edges:
                rec.check(gn.heights[step.source] > gn.heights[step.target],
                          lambda: f"{_show(node)} at {step.label}", "argument reduct kept v")


@lemma("rec_arithmetic")
def check_rec_arithmetic(corpus: Corpus, rec: Recorder) -> None:
    if REC.symbol not in corpus.calculus.alphabet:
        return
    for m in range(4):
        for n in range(4):
            for op, expected in ((ADD, m + n), (MULT, m * n)):
                term = apply(op, numeral(m), numeral(n))
                try:
                    nf = normalize(systemt_rules, term, corpus.cfg.fuel).nf
                except FuelExhausted:
                    rec.check(False, lambda: _show(term), "fuel exhausted")
                    continue
                rec.check(denumeral(nf) == expected and count_succ(nf) == expected,
                          lambda: _show(term), f"got {_show(nf)}, expected {expected}")


@lemma("normalize_consistency")
def check_normalize_consistency(corpus: Corpus, rec: Recorder) -> None:
    for term, _ in corpus.typed:
        s = corpus.summary(term)
        if not s.is_finite:
            continue
        try:
            result = normalize(corpus.rules, term, corpus.cfg.fuel)
        except FuelExhausted:
            rec.check(False, lambda: _show(term), "fuel exhausted")
            continue
        rec.check(not one_step_reducts(corpus.rules, result.nf) and len(result.steps) <= s.height,
                  lambda: _show(term), f"{len(result.steps)} steps, v={s.height}")


# -- typing -----------------------------------------------------------------

def _instances(t: MetaType) -> List[SimpleType]:
    metas = metas_of(t)
    if not metas:
        return [t]
    choices = (NAT, Arrow(NAT, NAT))
    instances = []
    for first in choices:
        for rest in choices:
            mapping = {meta: (first if i == 0 else rest) for i, meta in enumerate(metas)}
            instances.append(substitute_metas(t, mapping))
    return instances


@lemma("typing_soundness")
def check_typing_soundness(corpus: Corpus, rec: Recorder) -> None:
    signature, empty = corpus.calculus.signature, Context()
    for term, t in corpus.typed:
        derivation = infer_derivation(signature, empty, term)
        rec.check(derivation.type == t and check_derivation(signature, derivation),
                  lambda: f"{_show(term)} : {t}", "derivation does not replay")


@lemma("typing_principality")
def check_typing_principality(corpus: Corpus, rec: Recorder) -> None:
    signature, empty = corpus.calculus.signature, Context()
    for term, _ in corpus.typed:
        principal = infer(signature, empty, term)
        for instance in _instances(principal):
            rec.check(check(signature, empty, term, instance),
                      lambda: f"{_show(term)} : {instance}", f"principal type {principal}")


@lemma("context_shadowing")
def check_context_shadowing(corpus: Corpus, rec: Recorder) -> None:
    signature = corpus.calculus.signature
    pool = corpus.cfg.variable_pool
    front = Context.of((x, NAT) for x in pool)
    shadowed = Context.of(front.bindings + tuple((x, Arrow(NAT, NAT)) for x in pool))

    def outcome(ctx: Context, term: Term) -> Optional[MetaType]:
        try:
            return infer(signature, ctx, term)
        except TypingError:
            return None

    for term in corpus.terms:
        rec.check(outcome(front, term) == outcome(shadowed, term), lambda: _show(term))


# -- concrete syntax --------------------------------------------------------

@lemma("print_parse_roundtrip")
def check_print_parse_roundtrip(corpus: Corpus, rec: Recorder) -> None:
    alphabet = corpus.calculus.alphabet
    for term in corpus.terms:
        rec.check(parse_term(print_term(term), alphabet) == term, lambda: _show(term))
        rec.check(parse_term(print_term(term, binder=LAMBDA), alphabet) == term,
                  lambda: print_term(term, binder=LAMBDA))


def _run_lemma(name: str, corpus: Corpus) -> LemmaResult:
    recorder = Recorder(name, corpus.cfg.max_reported_failures)
    started = time.perf_counter()
    try:
        LEMMAS[name](corpus, recorder)
    except Exception as e:
        logger.exception("Lemma %s raised", name)
        recorder.check(False, name, f"raised {type(e).__name__}: {e}")
    recorder.result.millis = int((time.perf_counter() - started) * 1000)
    logger.info("%s: %d cases, %d failures", name, recorder.result.cases, recorder.result.failure_count)
    return recorder.result


def run_suite(cfg: CorpusConfig, names: Optional[Sequence[str]] = None) -> SuiteReport:
    """Run the selected lemmas (all by default) over the corpus described by ``cfg``."""
    selected = sorted(names if names is not None else LEMMAS)
    unknown = [name for name in selected if name not in LEMMAS]
    if unknown:
        raise ValueError(f"Unknown lemmas: {', '.join(unknown)}")
    corpus = Corpus(cfg)
    with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
        futures = {name: executor.submit(_run_lemma, name, corpus) for name in selected}
        results = [futures[name].result() for name in selected]
    return SuiteReport(cfg.system, cfg.seed, results)
