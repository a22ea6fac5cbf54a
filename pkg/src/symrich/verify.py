"""Cross-characterization richness verification and reproduction reports.

A verify run checks one word against one group through every bounded
characterization at once: tree-like structure of the symmetry graphs,
palindromicity of complete return words, unioccurrence of longest
palindromic suffixes, the defect profile, the palindromic complexity
balance, and the bilateral orders of bispecial factors.  The verdicts must
agree; any disagreement is reported as an inconsistency rather than being
papered over.

Bounded semantics: "rich up to n_max" means every check passed on the
indexed range; the properties quantify over all lengths, so a finite prefix
can refute but never fully certify them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ConsistencyError, GroupError, InsufficientPrefixError
from .graphs import (
    BispecialRecord,
    ComplexityIdentityRecord,
    TlsVerdict,
    bispecial_check,
    complexity_identity,
    tls_verdict,
)
from .index import LanguageIndex, factor_sets, stability_check
from .palindromes import (
    DefectProfile,
    defect_profile,
    g_defect,
    g_occurrences,
)
from .presets import (
    HEXA_ETA,
    HEXA_MU,
    OCTA_PI,
    OCTA_RULES,
    hexa_group,
    hexa_psi,
    hexa_text,
    octa_group,
    octa_source,
    octa_theta,
    reversal_group,
)
from .symmetry import SymmetryGroup
from .words import WordSource, apply_morphism

RICH = "rich-up-to-nmax"
ALMOST = "almost-rich-candidate"
REFUTED = "refuted"
INCONSISTENT = "inconsistent"

#: prefix length of the quadratic dual defect computation run on every verify
DEFECT_CROSSCHECK_HEAD = 160


def min_distinguishing(group: SymmetryGroup, index: LanguageIndex, n_max: int) -> int | None:
    """Smallest indexed order at which distinct antimorphisms act distinctly."""
    for n in range(n_max + 1):
        if group.is_distinguishing(index.factors(n)):
            return n
    return None


@dataclass(frozen=True)
class CrwRecord:
    """Complete return words of one orbit class of factors."""

    n: int
    representative: str
    occurrences: int
    checked: bool
    return_words: tuple[str, ...]
    violations: tuple[str, ...]
    shape_ok: bool


def crw_records(group: SymmetryGroup, index: LanguageIndex, text: str,
                n_lo: int, n_hi: int) -> list[CrwRecord]:
    records = []
    for n in range(n_lo, n_hi + 1):
        classes: dict[str, list[str]] = {}
        for w in index.sorted_factors(n):
            classes.setdefault(group.class_representative(w), []).append(w)
        for rep in sorted(classes):
            occ = sorted({q for m in classes[rep] for q in index.occurrences(m)})
            returns = tuple(sorted({text[i:j + n] for i, j in zip(occ, occ[1:])}))
            violations = tuple(v for v in returns if not group.is_g_palindrome(v))
            checked = len(occ) >= 3 or (len(occ) >= 2 and occ[-1] + n == len(text))
            shape_ok = all(_return_word_shape_ok(group, v, n) for v in returns)
            records.append(CrwRecord(n, rep, len(occ), checked, returns, violations, shape_ok))
    return records


def _return_word_shape_ok(group: SymmetryGroup, v: str, n: int) -> bool:
    """v = w a ... theta(a) theta(w) for some letter a and antimorphism theta."""
    head = v[:n + 1]
    return any(v.endswith(t.apply(head)) for t in group.antimorphisms)


@dataclass(frozen=True)
class AlternationResult:
    ok: bool
    violation: tuple[int, int, str, str] | None  # positions and the two factors


def alternation_check(group: SymmetryGroup, word: str, text: str) -> AlternationResult:
    """Consecutive orbit occurrences must be antimorphic images of each other."""
    occ = g_occurrences(group, word, text)
    n = len(word)
    for i, j in zip(occ, occ[1:]):
        prev, nxt = text[i:i + n], text[j:j + n]
        if not any(t.apply(prev) == nxt for t in group.antimorphisms):
            return AlternationResult(False, (i, j, prev, nxt))
    return AlternationResult(True, None)


@dataclass(frozen=True)
class RichnessReport:
    word_id: str
    group_id: str
    length: int
    n_max: int
    threshold: int
    stability: bool | None
    closed: bool
    missing_closure_witness: str | None
    min_distinguishing_n: int | None
    involutively_generated: bool
    tls: tuple[TlsVerdict, ...]
    crw: tuple[CrwRecord, ...]
    identity: tuple[ComplexityIdentityRecord, ...]
    bispecials: tuple[BispecialRecord, ...]
    profile: DefectProfile | None
    verdicts: dict[str, bool]
    witnesses: dict[str, str]
    agreement_ok: bool
    bound_ok: bool
    candidate_threshold: int | None
    contradiction: str | None
    overall: str

    def to_keyvalues(self) -> list[tuple[str, str]]:
        kv: list[tuple[str, str]] = [
            ("word", self.word_id),
            ("group", self.group_id),
            ("length", str(self.length)),
            ("n_max", str(self.n_max)),
            ("threshold", str(self.threshold)),
            ("stability", str(self.stability).lower()),
            ("closed", str(self.closed).lower()),
            ("min_distinguishing_n", str(self.min_distinguishing_n)),
            ("involutively_generated", str(self.involutively_generated).lower()),
            ("agreement", str(self.agreement_ok).lower()),
            ("bound", str(self.bound_ok).lower()),
            ("candidate_threshold", str(self.candidate_threshold)),
            ("contradiction", self.contradiction or "none"),
            ("overall", self.overall),
        ]
        for name in sorted(self.verdicts):
            kv.append((f"verdict.{name}", str(self.verdicts[name]).lower()))
        for name in sorted(self.witnesses):
            kv.append((f"witness.{name}", self.witnesses[name]))
        if self.profile is not None:
            kv.append(("defect.final", str(self.profile.final)))
            kv.append(("defect.lacunas", ",".join(map(str, self.profile.lacunas)) or "none"))
        return kv

    def to_text(self) -> str:
        lines = [
            f"richness report: word={self.word_id} group={self.group_id}",
            f"  prefix length {self.length}, orders checked {self.threshold}..{self.n_max}"
            " (bounded verification; the properties quantify over all orders)",
            f"  stability={self.stability} closed={self.closed}"
            f" min_distinguishing_n={self.min_distinguishing_n}"
            f" involutively_generated={self.involutively_generated}",
        ]
        if not self.closed:
            lines.append(f"  missing closure: {self.missing_closure_witness}")
        for name in sorted(self.verdicts):
            status = "pass" if self.verdicts[name] else "FAIL"
            line = f"  {name:<12} {status}"
            if name in self.witnesses:
                line += f"  [{self.witnesses[name]}]"
            lines.append(line)
        if self.profile is not None:
            lines.append(
                f"  defect profile: final={self.profile.final}"
                f" lacunas={list(self.profile.lacunas[:12])}"
                + ("..." if len(self.profile.lacunas) > 12 else "")
            )
        lines.append(f"  agreement={self.agreement_ok} bound={self.bound_ok}")
        if self.contradiction:
            lines.append(f"  CONTRADICTION: {self.contradiction}")
        lines.append(f"  overall: {self.overall}"
                     + (f" (threshold {self.candidate_threshold})" if self.overall == ALMOST else ""))
        lines.append("[data]")
        lines += [f"{k} = {v}" for k, v in self.to_keyvalues()]
        return "\n".join(lines) + "\n"


def verify_text(
    group: SymmetryGroup,
    text: str,
    *,
    n_max: int,
    threshold: int = 1,
    stability: bool | None = None,
    index: LanguageIndex | None = None,
    word_id: str = "word",
    group_id: str | None = None,
) -> RichnessReport:
    """Run every bounded richness characterization of ``text`` against ``group``."""
    if not group.has_antimorphism:
        raise GroupError("richness analysis requires a group containing an antimorphism")
    if threshold < 1:
        raise GroupError(f"threshold must be >= 1, got {threshold}")
    if len(text) < n_max + 2:
        raise InsufficientPrefixError(f"prefix of length {len(text)} cannot support n_max={n_max}")
    if group_id is None:
        group_id = f"order{group.order}"
    if index is None:
        index = LanguageIndex(text, n_max + 2, group)

    base = dict(
        word_id=word_id, group_id=group_id, length=len(text), n_max=n_max,
        threshold=threshold, stability=stability,
        involutively_generated=group.is_involutively_generated(),
    )

    if index.closure_added:
        n_bad = min(index.closure_added)
        witness = sorted(index.closure_added[n_bad])[0]
        if stability is not True:
            # cannot separate truncation from genuine non-closure without stability
            raise InsufficientPrefixError(
                f"group closure added factor {witness!r} at length {n_bad} and the prefix "
                f"is not known to be stable; extend the prefix"
            )
        detail = f"image {witness!r} (length {n_bad}) never occurs in the stable prefix"
        return RichnessReport(
            **base,
            closed=False,
            missing_closure_witness=detail,
            min_distinguishing_n=None,
            tls=(), crw=(), identity=(), bispecials=(), profile=None,
            verdicts={"closure": False},
            witnesses={"closure": detail},
            agreement_ok=True,
            bound_ok=True,
            candidate_threshold=None,
            contradiction=None,
            overall=REFUTED,
        )

    n0 = min_distinguishing(group, index, n_max)

    tls_results = tuple(tls_verdict(group, index, n) for n in range(1, n_max + 1))
    crw = tuple(crw_records(group, index, text, 1, n_max))
    identity = tuple(complexity_identity(group, index, range(0, n_max + 1)))
    bisp = tuple(bispecial_check(group, index, range(1, n_max + 1)))
    profile = defect_profile(group, text)
    _crosscheck_defect_head(group, text, profile)

    distinguishing_at = {r.n: r.distinguishing for r in identity}

    fail_points: list[int] = []
    witnesses: dict[str, str] = {}

    tls_fails = [v for v in tls_results if not v.satisfied]
    if tls_fails:
        first = tls_fails[0]
        witnesses["tls"] = f"order {first.order}: {first.witness}"
        fail_points += [v.order for v in tls_fails]

    crw_bad = [r for r in crw if r.violations]
    if crw_bad:
        first = crw_bad[0]
        witnesses["return-words"] = (
            f"class [{first.representative}] has non-palindromic return word {first.violations[0]!r}"
        )
        fail_points += [r.n for r in crw_bad]

    if profile.lacunas:
        witnesses["lps"] = f"first lacuna at position {profile.lacunas[0]}"
        witnesses["defect"] = f"defect reaches {profile.final}"
        fail_points += list(profile.lacunas)

    ceq_bad = [r for r in identity if r.distinguishing and r.n >= threshold and not r.equal]
    if ceq_bad:
        first = ceq_bad[0]
        witnesses["complexity"] = f"order {first.n}: {first.lhs} != {first.rhs}"
        fail_points += [r.n for r in ceq_bad]

    # The bilateral-order conditions characterize richness only together with
    # the complexity equality anchored at one distinguishing order.
    anchor = next(
        (r for r in identity if r.distinguishing and r.n >= threshold), None,
    )
    anchor_ok = anchor.equal if anchor is not None else True

    bisp_bad = [r for r in bisp if distinguishing_at.get(r.n, False)
                and r.n >= threshold and not r.ok]
    if bisp_bad:
        first = bisp_bad[0]
        witnesses["bispecial"] = (
            f"{first.factor!r}: b={first.bilateral}, fixers={list(first.fixer_names)},"
            f" pext sizes={list(first.pext_sizes)}"
        )
        fail_points += [r.n for r in bisp_bad]
    elif not anchor_ok:
        witnesses["bispecial"] = (
            f"anchor equality at order {anchor.n} fails: {anchor.lhs} != {anchor.rhs}"
        )
        fail_points.append(anchor.n)

    at = threshold
    verdicts = {
        "tls": all(v.satisfied for v in tls_results if v.order >= at),
        "return-words": not any(r.violations for r in crw if r.n >= at),
        "lps": not any(pos >= at for pos in profile.lacunas),
        "defect": profile.final == 0 if at == 1 else profile.stabilized,
        "complexity": all(r.equal for r in identity if r.distinguishing and r.n >= at),
        "bispecial": anchor_ok and all(
            r.ok for r in bisp if distinguishing_at.get(r.n, False) and r.n >= at
        ),
    }
    agreement_ok = len(set(verdicts.values())) == 1
    bound_ok = all(r.holds for r in identity if r.distinguishing)

    candidate: int | None
    if fail_points:
        candidate = max(fail_points) + 1
        if candidate > n_max:
            candidate = None
    else:
        candidate = threshold

    contradiction = None
    all_pass = all(verdicts.values())
    if all_pass and not base["involutively_generated"]:
        contradiction = (
            "all characterizations pass but the group is not generated by its involutive "
            "antimorphisms, which richness would force"
        )

    if not agreement_ok:
        overall = INCONSISTENT
    elif contradiction:
        overall = INCONSISTENT
    elif all_pass:
        overall = RICH
    elif candidate is not None and candidate <= n_max:
        overall = ALMOST
    else:
        overall = REFUTED

    return RichnessReport(
        **base,
        closed=True,
        missing_closure_witness=None,
        min_distinguishing_n=n0,
        tls=tls_results,
        crw=crw,
        identity=identity,
        bispecials=bisp,
        profile=profile,
        verdicts=verdicts,
        witnesses=witnesses,
        agreement_ok=agreement_ok,
        bound_ok=bound_ok,
        candidate_threshold=candidate,
        contradiction=contradiction,
        overall=overall,
    )


def _crosscheck_defect_head(group: SymmetryGroup, text: str, profile: DefectProfile) -> None:
    """Run the quadratic dual defect computation on a head of the text."""
    head = text[:DEFECT_CROSSCHECK_HEAD]
    dual = g_defect(group, head)
    if dual.defect != profile.defect[:len(head) + 1]:
        raise ConsistencyError("incremental defect profile disagrees with the dual computation")


def verify(
    group: SymmetryGroup,
    source: WordSource,
    length: int,
    n_max: int,
    threshold: int = 1,
    *,
    word_id: str | None = None,
    group_id: str | None = None,
    auto_extend: bool = True,
) -> RichnessReport:
    """Generate a prefix, run the stability guard, and verify it.

    When the factor sets of prefix(L) and prefix(2L) disagree the prefix is
    doubled (up to six times); persistent instability raises.
    """
    if length < n_max + 2:
        raise InsufficientPrefixError(f"length {length} cannot support n_max={n_max}")
    attempts = 6 if auto_extend else 0
    stability = stability_check(source, length, n_max + 2)
    while stability is False and attempts > 0:
        length *= 2
        attempts -= 1
        stability = stability_check(source, length, n_max + 2)
    if stability is False:
        raise InsufficientPrefixError(
            f"factor sets up to length {n_max + 2} still change when doubling the prefix "
            f"beyond {length} letters"
        )
    text = source.prefix(length)
    return verify_text(
        group, text, n_max=n_max, threshold=threshold, stability=stability,
        word_id=word_id or repr(source), group_id=group_id,
    )


# -- reproduction of the bundled case studies ---------------------------------------


@dataclass(frozen=True)
class CheckLine:
    name: str
    ok: bool
    detail: str

    def render(self) -> str:
        return f"  [{'ok' if self.ok else 'FAIL'}] {self.name}: {self.detail}"


@dataclass(frozen=True)
class CaseStudyReport:
    title: str
    richness: RichnessReport
    subgroup_results: tuple["SubgroupResult", ...]
    checks: tuple[CheckLine, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return (
            self.richness.overall == RICH
            and all(c.ok for c in self.checks)
            and all(r.identity_ok is not False for r in self.subgroup_results)
        )

    def to_text(self) -> str:
        lines = [f"case study: {self.title}", f"overall ok: {self.ok}"]
        lines += [c.render() for c in self.checks]
        for r in self.subgroup_results:
            lines.append("  " + r.render())
        lines.append(self.richness.to_text())
        return "\n".join(lines) + "\n"


def repro_octa(length: int = 2000, n_max: int = 30) -> CaseStudyReport:
    """The 8-letter fixed point against its order-8 symmetry group.

    Beyond the richness verification this replays the structural facts that
    drive it: the bilateral orders of bispecials, the last-letter recursion
    that maps a bispecial w to phi(w)pi(last) with equal bilateral order, and
    the first-letter commutation identity between the generators and phi.
    """
    source = octa_source()
    group = octa_group()
    report = verify(group, source, length, n_max, word_id="octa", group_id="octa-group")
    text = source.prefix(length)
    index = LanguageIndex(text, n_max + 2, group)
    checks: list[CheckLine] = []

    c = index.complexities()
    checks.append(CheckLine("first complexity difference at 1", c[2] - c[1] == 4,
                            f"dC(1) = {c[2] - c[1]}"))
    expected_l2 = {"54", "62", "47", "12", "04", "76", "65", "40", "01", "23", "30", "26"}
    checks.append(CheckLine("length-2 factor set", set(index.factors(2)) == expected_l2,
                            f"{len(index.factors(2))} factors"))
    pal1 = [w for w in index.sorted_factors(1) if group.is_g_palindrome(w)]
    pal2 = [w for w in index.sorted_factors(2) if group.is_g_palindrome(w)]
    checks.append(CheckLine("palindromic letters", len(pal1) == 8, f"{len(pal1)} of 8"))
    checks.append(CheckLine("palindromic length-2 classes", len(pal2) == 4, f"{pal2}"))

    bispecials = [w for n in range(1, n_max + 1) for w in index.bispecials(n)]
    bs_ok = all(
        index.bilateral_order(w) == 0
        and len(index.lext(w)) == 2
        and len(index.rext(w)) == 2
        for w in bispecials
    )
    checks.append(CheckLine("bispecial bilateral orders", bs_ok,
                            f"{len(bispecials)} bispecials, all b=0 with 2+2 extensions"))
    pal_ext_ok = True
    for w in bispecials:
        fixers = group.antimorphic_fixers(w)
        if len(fixers) != 1 or len(index.pext(fixers[0], w)) != 1:
            pal_ext_ok = False
            break
    checks.append(CheckLine("bispecials are palindromic with one palindromic extension",
                            pal_ext_ok, f"checked {len(bispecials)}"))

    recursion_bad = []
    for w in bispecials:
        last = w[-1]
        if last not in OCTA_PI:
            recursion_bad.append((w, "last letter not in 0/2/4/6"))
            continue
        image = apply_morphism(OCTA_RULES, w) + OCTA_PI[last]
        if len(image) > n_max:
            continue
        if not (index.is_factor(image) and index.is_bispecial(image)
                and index.bilateral_order(image) == index.bilateral_order(w)):
            recursion_bad.append((w, image))
    checks.append(CheckLine("bispecial image recursion", not recursion_bad,
                            f"violations: {recursion_bad[:3]}" if recursion_bad else "holds"))

    commutation_bad = _octa_commutation_violations(index, n_max)
    checks.append(CheckLine("generator commutation identity", not commutation_bad,
                            f"violations: {commutation_bad[:3]}" if commutation_bad else
                            "holds for every indexed factor and i in Z3"))

    return CaseStudyReport("octa word / order-8 group", report, (), tuple(checks))


def _octa_commutation_violations(index: LanguageIndex, n_max: int) -> list[tuple[str, int]]:
    thetas = [octa_theta(i) for i in range(3)]
    phi = OCTA_RULES
    bad = []
    for n in range(1, n_max + 1):
        for w in index.sorted_factors(n):
            phi_w = apply_morphism(phi, w)
            for i in range(3):
                theta_i, theta_prev = thetas[i], thetas[(i - 1) % 3]
                x = apply_morphism(phi, theta_prev.image_of(w[-1]))[0]
                y = theta_i.image_of(apply_morphism(phi, w[0])[0])
                if x + theta_i.apply(phi_w) != apply_morphism(phi, theta_prev.apply(w)) + y:
                    bad.append((w, i))
    return bad


def repro_hexa(length: int = 2000, n_max: int = 30) -> CaseStudyReport:
    """The 6-letter image word against its order-8 group and its subgroups."""
    group = hexa_group()
    text = hexa_text(length)
    stability = factor_sets(text, n_max + 2) == factor_sets(hexa_text(2 * length), n_max + 2)
    report = verify_text(group, text, n_max=n_max, threshold=1, stability=stability,
                         word_id="hexa", group_id="hexa-group")
    index = LanguageIndex(text, n_max + 2, group)
    checks: list[CheckLine] = []

    c = index.complexities()
    checks.append(CheckLine("first complexity differences", (c[2] - c[1], c[3] - c[2]) == (2, 4),
                            f"dC(1) = {c[2] - c[1]}, dC(2) = {c[3] - c[2]}"))
    p = {i: index.palindromic_complexity(hexa_psi(i)) for i in range(3)}
    total = {n: sum(index.palindromic_complexity(t)[n] for t in group.involutive_antimorphisms)
             for n in (2, 3)}
    checks.append(CheckLine("palindromic complexity sums", (total[2], total[3]) == (0, 12),
                            f"sum P(2) = {total[2]}, sum P(3) = {total[3]}"))
    checks.append(CheckLine("length-3 palindromes per generator",
                            (p[0][3], p[1][3], p[2][3]) == (4, 4, 4),
                            f"P0(3)={p[0][3]} P1(3)={p[1][3]} P2(3)={p[2][3]}"))
    checks.append(CheckLine(
        "palindromic letters per generator",
        (p[0][1], p[2][1], p[1][1]) == (2, 2, 4),
        f"P0(1)={p[0][1]} P2(1)={p[2][1]} P1(1)={p[1][1]}",
    ))

    transport_bad = _hexa_transport_violations(text, n_max)
    checks.append(CheckLine("palindrome transport", not transport_bad,
                            f"violations: {transport_bad[:3]}" if transport_bad else "holds"))

    corr_ok, corr_detail = _hexa_bispecial_correspondence(index, n_max)
    checks.append(CheckLine("bispecial correspondence", corr_ok, corr_detail))

    scan = subgroup_scan(group, text=text, n_max=min(n_max, 20), stability=stability)
    return CaseStudyReport("hexa word / order-8 group", report, tuple(scan), tuple(checks))


def _hexa_transport_violations(v_text: str, n_max: int) -> list[tuple[str, int]]:
    """theta_i-palindromic factors of the octa word map to psi_i-palindromic factors."""
    u_max = max((n_max - 3) // 2, 4)
    u_text = octa_source().prefix(max(len(v_text), 4 * u_max))
    u_index = LanguageIndex(u_text, u_max, octa_group())
    bad = []
    for i in range(3):
        theta, psi = octa_theta(i), hexa_psi(i)
        for n in range(1, u_max + 1):
            for w in u_index.theta_palindromes(theta, n):
                image = apply_morphism(HEXA_MU, w) + HEXA_ETA[w[-1]]
                if v_text.find(image) == -1 or psi.apply(image) != image:
                    bad.append((w, i))
    return bad


def _hexa_bispecial_correspondence(v_index: LanguageIndex, n_max: int) -> tuple[bool, str]:
    """Bispecials of the image word of length >= 5 are exactly the mapped
    bispecials of the octa word, one each."""
    u_max = (n_max - 3) // 2
    u_text = octa_source().prefix(max(len(v_index.text), 8 * u_max))
    u_index = LanguageIndex(u_text, u_max + 2, octa_group())
    mapped = {}
    for n in range(1, u_max + 1):
        for w in u_index.bispecials(n):
            image = apply_morphism(HEXA_MU, w) + HEXA_ETA[w[-1]]
            if image in mapped:
                return False, f"images collide: {mapped[image]!r} and {w!r}"
            mapped[image] = w
    v_bispecials = {
        w for n in range(5, n_max + 1) for w in v_index.bispecials(n)
    }
    expected = {img for img in mapped if 5 <= len(img) <= n_max}
    if v_bispecials != expected:
        extra = sorted(v_bispecials - expected)[:3]
        missing = sorted(expected - v_bispecials)[:3]
        return False, f"mismatch; unexpected {extra}, missing {missing}"
    return True, f"{len(v_bispecials)} bispecials of length 5..{n_max} all correspond"


# -- subgroup scan -------------------------------------------------------------------


@dataclass(frozen=True)
class SubgroupResult:
    group_id: str
    order: int
    proper: bool
    overall: str
    identity_ok: bool | None  # None when not applicable (not proper or not rich)
    identity_values: tuple[tuple[int, int], ...]  # (n, sum over complement antimorphisms)

    def render(self) -> str:
        out = f"subgroup {self.group_id} (order {self.order}): {self.overall}"
        if self.identity_ok is not None:
            out += f", index-2 identity {'holds' if self.identity_ok else 'FAILS'}"
        return out


def subgroup_scan(
    group: SymmetryGroup,
    source: WordSource | None = None,
    length: int = 2000,
    n_max: int = 20,
    *,
    text: str | None = None,
    stability: bool | None = None,
) -> list[SubgroupResult]:
    """Verify every subgroup containing an antimorphism and, for proper rich
    subgroups, check the half-order palindromic-complexity identity."""
    if text is None:
        if source is None:
            raise GroupError("subgroup_scan needs a source or a text")
        stability = stability_check(source, length, n_max + 2)
        text = source.prefix(length)
    index = LanguageIndex(text, n_max + 2, group)
    if index.closure_added:
        raise InsufficientPrefixError(
            f"prefix does not close under the full group at lengths {sorted(index.closure_added)}"
        )
    n0 = min_distinguishing(group, index, n_max)
    p = {t: index.palindromic_complexity(t) for t in group.involutive_antimorphisms}

    results = []
    for sub in group.subgroups():
        if not sub.has_antimorphism:
            continue
        sub_id = "{" + ",".join(e.name for e in sub.elements) + "}"
        report = verify_text(
            sub, text, n_max=n_max, threshold=1, stability=stability,
            index=index, word_id="scan", group_id=sub_id,
        )
        identity_ok: bool | None = None
        values: tuple[tuple[int, int], ...] = ()
        if len(sub) < group.order and report.overall == RICH and n0 is not None:
            complement = [t for t in group.involutive_antimorphisms
                          if t not in sub.involutive_antimorphisms]
            vals = []
            ok = 2 * sub.order == group.order
            for n in range(n0, n_max):
                s = sum(p[t][n] + p[t][n + 1] for t in complement)
                vals.append((n, s))
                if s != group.order // 2:
                    ok = False
            identity_ok = ok
            values = tuple(vals)
        results.append(SubgroupResult(sub_id, sub.order, len(sub) < group.order,
                                      report.overall, identity_ok, values))
    return results


# -- classical defect vs complexity sum ----------------------------------------------


@dataclass(frozen=True)
class DefectSumCheck:
    """2 D(prefix) against the running sum of T(n) = dC(n) + 2 - P(n) - P(n+1)."""

    defect: int
    t_values: tuple[int, ...]
    partial_sum: int
    defect_stable: bool
    tail_zero: bool

    @property
    def matching(self) -> bool | None:
        if not (self.defect_stable and self.tail_zero):
            return None
        return 2 * self.defect == self.partial_sum


def defect_sum_check(source: WordSource, length: int, n_max: int) -> DefectSumCheck:
    group = reversal_group(source.alphabet)
    text = source.prefix(length)
    index = LanguageIndex(text, n_max + 1, group)
    c = index.complexities()
    rev = group.involutive_antimorphisms[0]
    p = index.palindromic_complexity(rev)
    t_values = tuple((c[n + 1] - c[n]) + 2 - p[n] - p[n + 1] for n in range(n_max))
    profile = defect_profile(group, text)
    tail = t_values[-3:] if len(t_values) >= 3 else t_values
    return DefectSumCheck(
        defect=profile.final,
        t_values=t_values,
        partial_sum=sum(t_values),
        defect_stable=profile.stabilized,
        tail_zero=all(v == 0 for v in tail),
    )
