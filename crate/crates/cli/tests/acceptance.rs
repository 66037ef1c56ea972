//! Acceptance suite. Every criterion is checked at exact equality on seeded
//! random instances and reported on its own line.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sweedler::{
    apply_diff_op, bang_map, bell_number, eval_map, promote, promote_counted, query_set, script_c,
    script_d, set_partitions, BangElement, Basis, CanonicalKet, Dereliction, DerelictionThen,
    GeneralizedFraction, KetMap, Label, LinearMapSpec, MatrixMapSpec, Multiindex, Polynomial,
    Rational, TensorElement, TensorPower, Vector, DEFAULT_PARTITION_CAP,
};

const CAP: usize = DEFAULT_PARTITION_CAP;
const CASES: usize = 200;
const W: [&str; 3] = ["e1", "e2", "e3"];
const V: [&str; 2] = ["f1", "f2"];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn basis(name: &str, labels: &[&str]) -> Basis {
    Basis::new(name, labels.iter().map(|l| Label::from(*l)).collect()).unwrap()
}

struct Gen(ChaCha8Rng);

impl Gen {
    fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    fn rational(&mut self) -> Rational {
        q(self.0.gen_range(-5..=5), self.0.gen_range(1..=5))
    }

    fn nonzero(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    fn vector(&mut self, labels: &[&str]) -> Vector {
        Vector::from_entries(labels.iter().map(|l| (Label::from(*l), self.rational())))
    }

    fn multiindex(&mut self, labels: &[&str], degree: u32) -> Multiindex {
        let picks: Vec<Label> = (0..degree)
            .map(|_| Label::from(*labels.choose(&mut self.0).unwrap()))
            .collect();
        Multiindex::from_labels(picks.iter())
    }

    fn ket(&mut self, labels: &[&str], max_degree: u32) -> CanonicalKet {
        let point = self.vector(labels);
        let d = self.0.gen_range(0..=max_degree);
        CanonicalKet::new(point, self.multiindex(labels, d))
    }

    /// One to four terms spread over two points.
    fn element(&mut self, labels: &[&str], max_degree: u32) -> BangElement {
        let points = [self.vector(labels), self.vector(labels)];
        let n = self.0.gen_range(1..=4);
        BangElement::from_terms((0..n).map(|_| {
            let p = points[self.0.gen_range(0..2)].clone();
            let d = self.0.gen_range(0..=max_degree);
            (CanonicalKet::new(p, self.multiindex(labels, d)), self.nonzero())
        }))
    }

    fn polynomial(&mut self, labels: &[&str], max_degree: u32) -> Polynomial {
        let n = self.0.gen_range(1..=5);
        Polynomial::from_terms((0..n).map(|_| {
            let d = self.0.gen_range(0..=max_degree);
            (self.multiindex(labels, d), self.rational())
        }))
    }

    /// A table over every ket the lift of `eta` consults, about one entry in five left zero.
    fn table(&mut self, eta: &BangElement) -> LinearMapSpec {
        let mut phi = LinearMapSpec::new(basis("W", &W), basis("V", &V));
        for k in query_set(eta) {
            if self.0.gen_range(0..5) > 0 {
                let v = self.vector(&V);
                phi.insert(k, v).unwrap();
            }
        }
        phi
    }

    fn matrix(&mut self, domain: &[&str], dname: &str, codomain: &[&str], cname: &str) -> MatrixMapSpec {
        let mut m = MatrixMapSpec::new(basis(dname, domain), basis(cname, codomain));
        for l in domain {
            let v = self.vector(codomain);
            m.set(Label::from(*l), v).unwrap();
        }
        m
    }
}

/// Coproduct by enumerating the `2^s` ways to split the creation vectors.
fn coproduct_by_subsets(eta: &BangElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (k, c) in eta.terms() {
        let labels = k.creation_labels();
        for mask in 0u32..(1 << labels.len()) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, l) in labels.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(l.clone());
                } else {
                    right.push(l.clone());
                }
            }
            out.add_term(
                k.with_content(Multiindex::from_labels(left.iter())),
                k.with_content(Multiindex::from_labels(right.iter())),
                c.clone(),
            );
        }
    }
    out
}

fn monomials_up_to(labels: &[&str], d: u32) -> Vec<Multiindex> {
    let mut seen = BTreeSet::new();
    let mut frontier = vec![Multiindex::one()];
    seen.insert(Multiindex::one());
    for _ in 0..d {
        let mut next = Vec::new();
        for m in &frontier {
            for l in labels {
                let r = m.raised(&Label::from(*l));
                if seen.insert(r.clone()) {
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

fn criterion_1() -> Check {
    let mut g = Gen::new(1);
    for i in 0..CASES {
        let eta = g.element(&W, 5);
        let delta = eta.coproduct();
        ensure!(delta == coproduct_by_subsets(&eta), "case {i}: coproduct differs from subset enumeration");
        ensure!(delta.coproduct_left() == delta.coproduct_right(), "case {i}: coassociativity");
        ensure!(
            delta.coproduct_left() == TensorPower::iterated_coproduct(&eta, 3),
            "case {i}: iterated coproduct"
        );
        ensure!(delta.counit_left() == eta, "case {i}: left counit law");
        ensure!(delta.counit_right() == eta, "case {i}: right counit law");
        ensure!(delta.swap() == delta, "case {i}: cocommutativity");
    }
    for i in 0..50 {
        let n = g.0.gen_range(1..=3);
        let p = g.vector(&W[..n]);
        let vac = BangElement::vacuum(p.clone());
        let expected = TensorElement::outer(&vac, &vac);
        ensure!(vac.coproduct() == expected, "vacuum {i}: not group-like");
        ensure!(vac.counit().is_one(), "vacuum {i}: counit is not 1");
    }
    Ok(format!("{CASES} elements, 50 vacua"))
}

fn criterion_2() -> Check {
    let mut g = Gen::new(2);
    for i in 0..100 {
        let n = g.0.gen_range(1..=3);
        let p = g.vector(&W[..n]);
        let nu = g.vector(&W[..n]);
        ensure!(BangElement::vacuum(p.clone()).dereliction() == p, "case {i}: d|0>_P != P");
        ensure!(BangElement::ket(p.clone(), std::slice::from_ref(&nu)).dereliction() == nu, "case {i}: d|nu>_P != nu");
        let s = g.0.gen_range(2..=5);
        let dirs: Vec<Vector> = (0..s).map(|_| g.vector(&W[..n])).collect();
        let high = BangElement::ket(p, &dirs);
        ensure!(high.dereliction().is_zero(), "case {i}: degree {s} ket has nonzero dereliction");
    }
    Ok("100 (P, nu)".into())
}

fn criterion_3() -> Check {
    let mut g = Gen::new(3);
    for i in 0..CASES {
        let eta = g.element(&W, 5);
        let f = g.polynomial(&W, 5);
        let paired = eta.residue_pair(&f);
        ensure!(paired == eta.r_action(&f).counit(), "case {i}: pairing vs counit of R-action");
        let mut by_poly = Rational::zero();
        for (k, c) in eta.terms() {
            let dirs: Vec<Vector> = k.creation_labels().into_iter().map(Vector::basis).collect();
            by_poly += c * apply_diff_op(&dirs, &f).eval(&k.point);
        }
        ensure!(paired == by_poly, "case {i}: pairing vs differential operator route");
    }
    Ok(format!("{CASES} (f, eta), deg f <= 5"))
}

fn criterion_4() -> Check {
    let mut g = Gen::new(4);
    for i in 0..CASES {
        let eta = g.element(&W, 5);
        let fr = eta.to_fractions();
        ensure!(BangElement::from_fractions(fr.iter()) == eta, "case {i}: fraction round trip");
    }
    let mut checked = 0;
    for _ in 0..4 {
        let p = g.vector(&W);
        let mut queue = vec![(GeneralizedFraction::vacuum(p.clone()), Rational::one(), Vec::<Label>::new())];
        // Walk every exponent vector with entries <= 4 by differentiating from the vacuum.
        let mut seen = BTreeSet::new();
        while let Some((frac, factor, path)) = queue.pop() {
            if !seen.insert(frac.exponents.clone()) {
                continue;
            }
            let ket = CanonicalKet::new(p.clone(), Multiindex::from_labels(path.iter()));
            let fr = BangElement::from_ket(ket.clone()).to_fractions();
            ensure!(
                fr == vec![(frac.clone(), factor.clone())],
                "ket {ket}: expected {factor} * {frac}, got {fr:?}"
            );
            checked += 1;
            for l in W {
                let label = Label::from(l);
                if frac.exponents.get(&label) < 4 {
                    let (c, raised) = frac.differentiate(&label);
                    let mut next = path.clone();
                    next.push(label);
                    queue.push((raised, &factor * &c, next));
                }
            }
        }
    }
    ensure!(checked == 4 * 125, "enumerated {checked} kets");
    Ok(format!("{CASES} round trips, {checked} kets with a_i <= 4"))
}

fn criterion_5() -> Check {
    let mut g = Gen::new(5);
    for i in 0..CASES {
        let eta = g.element(&W, 4);
        let phi = g.table(&eta);
        let lifted = promote(&phi, &eta, CAP).map_err(|e| e.to_string())?;
        ensure!(lifted.dereliction() == eval_map(&phi, &eta).unwrap(), "case {i}: d(promote) != phi");
    }
    Ok(format!("{CASES} tables"))
}

fn criterion_6() -> Check {
    let mut g = Gen::new(6);
    for i in 0..CASES {
        let eta = g.element(&W, 4);
        let phi = g.table(&eta);
        let lifted = promote(&phi, &eta, CAP).map_err(|e| e.to_string())?;
        let rhs = eta
            .coproduct()
            .try_map_factors(|k| promote(&phi, &BangElement::from_ket(k.clone()), CAP))
            .map_err(|e| e.to_string())?;
        ensure!(lifted.coproduct() == rhs, "case {i}: coproduct not preserved");
        ensure!(lifted.counit() == eta.counit(), "case {i}: counit not preserved");
    }
    Ok(format!("{CASES} tables"))
}

fn criterion_7() -> Check {
    let mut g = Gen::new(7);
    let mut pairs = 0;
    for i in 0..CASES {
        let eta = g.element(&W, 4);
        let phi = g.table(&eta);
        let lifted = promote(&phi, &eta, CAP).map_err(|e| e.to_string())?;
        let s = eta.max_degree().unwrap_or(0);
        for m in monomials_up_to(&V, s) {
            let f = Polynomial::monomial(m, Rational::one());
            let paired = lifted.residue_pair(&f);
            let c = script_c(&f, &phi, &eta).map_err(|e| e.to_string())?;
            let d = script_d(&f, &phi, &eta, CAP).map_err(|e| e.to_string())?;
            ensure!(paired == c && c == d, "case {i}, f = {f}: pairing {paired}, C {c}, D {d}");
            pairs += 1;
        }
    }
    Ok(format!("{CASES} lifts, {pairs} monomials"))
}

/// `Σ_{I ⊆ [s]} φ(ν_I)_e · oracle(g, |ν_{I^c}⟩_P)`, by explicit subset enumeration.
fn recursion_rhs(
    oracle: &dyn Fn(&Polynomial, &BangElement) -> Rational,
    phi: &LinearMapSpec,
    ket: &CanonicalKet,
    coord: &Label,
    g: &Polynomial,
) -> Rational {
    let labels = ket.creation_labels();
    let s = labels.len();
    let mut total = Rational::zero();
    for mask in 0u32..(1 << s) {
        let pick = |inside: bool| {
            let ls: Vec<Label> = (0..s)
                .filter(|i| (mask & (1 << i) != 0) == inside)
                .map(|i| labels[i].clone())
                .collect();
            ket.with_content(Multiindex::from_labels(ls.iter()))
        };
        let weight = phi.image(&pick(true)).get(coord);
        if !weight.is_zero() {
            total += weight * oracle(g, &BangElement::from_ket(pick(false)));
        }
    }
    total
}

fn criterion_8() -> Check {
    let mut g = Gen::new(8);
    for i in 0..CASES {
        let ket = g.ket(&W, 4);
        let eta = BangElement::from_ket(ket.clone());
        let phi = g.table(&eta);
        let poly = g.polynomial(&V, 3);
        let coord = Label::from(*V.choose(&mut g.0).unwrap());
        let f = &Polynomial::var(coord.clone()) * &poly;
        let by_c = |p: &Polynomial, e: &BangElement| script_c(p, &phi, e).unwrap();
        let by_d = |p: &Polynomial, e: &BangElement| script_d(p, &phi, e, CAP).unwrap();
        ensure!(by_c(&f, &eta) == recursion_rhs(&by_c, &phi, &ket, &coord, &poly), "case {i}: C");
        ensure!(by_d(&f, &eta) == recursion_rhs(&by_d, &phi, &ket, &coord, &poly), "case {i}: D");
    }
    Ok(format!("{CASES} instances"))
}

fn criterion_9() -> Check {
    let mut g = Gen::new(9);
    let err = |e: sweedler::Error| e.to_string();
    for i in 0..CASES {
        let eta = g.element(&W, 4);
        let id = MatrixMapSpec::identity(basis("W", &W));
        ensure!(bang_map(&id, &eta).map_err(err)? == eta, "case {i}: bang_map(id) != id");
        let inner = g.matrix(&W, "W", &W, "W");
        let outer = g.matrix(&W, "W", &V, "V");
        let composed = outer.compose(&inner).map_err(err)?;
        let stepwise = bang_map(&outer, &bang_map(&inner, &eta).map_err(err)?).map_err(err)?;
        ensure!(bang_map(&composed, &eta).map_err(err)? == stepwise, "case {i}: composition");

        let mut table = LinearMapSpec::new(basis("W", &W), basis("V", &V));
        for k in query_set(&eta) {
            let v = DerelictionThen(&outer).image(&k);
            table.insert(k, v).unwrap();
        }
        let direct = bang_map(&outer, &eta).map_err(err)?;
        ensure!(promote(&table, &eta, CAP).map_err(err)? == direct, "case {i}: bang_map vs degree <= 1 table");
        ensure!(promote(&Dereliction, &eta, CAP).map_err(err)? == eta, "case {i}: promote(d) != id");
    }
    Ok(format!("{CASES} elements"))
}

/// Counts set partitions of an `s`-set through all `s^s` self-maps: a map whose
/// image has `k` elements is one of `s!/(s-k)!` maps inducing the same partition.
fn bell_by_assignment(s: usize) -> Rational {
    if s == 0 {
        return Rational::one();
    }
    let fact = |n: usize| (1..=n as i64).product::<i64>();
    let mut by_image = vec![0u64; s + 1];
    let mut digits = vec![0usize; s];
    loop {
        let mask = digits.iter().fold(0u32, |m, &d| m | (1 << d));
        by_image[mask.count_ones() as usize] += 1;
        let mut i = 0;
        while i < s {
            digits[i] += 1;
            if digits[i] < s {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == s {
            break;
        }
    }
    by_image
        .iter()
        .enumerate()
        .filter(|(k, _)| *k > 0)
        .map(|(k, &count)| q(count as i64 * fact(s - k), fact(s)))
        .sum()
}

fn criterion_10() -> Check {
    const EXPECTED: [u128; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
    for (s, &bell) in EXPECTED.iter().enumerate() {
        let parts = set_partitions(s, CAP).map_err(|e| e.to_string())?;
        ensure!(bell_by_assignment(s) == q(bell as i64, 1), "s = {s}: assignment count");
        ensure!(parts.len() as u128 == bell, "s = {s}: {} partitions", parts.len());
        ensure!(bell_number(s) == bell, "s = {s}: bell_number");
        let mut seen = BTreeSet::new();
        for p in &parts {
            let mut covered: Vec<usize> = p.blocks().iter().flatten().copied().collect();
            covered.sort_unstable();
            ensure!(covered == (0..s).collect::<Vec<_>>(), "s = {s}: {p} is not a partition");
            ensure!(p.blocks().iter().all(|b| !b.is_empty()), "s = {s}: empty block in {p}");
            let canon: BTreeSet<BTreeSet<usize>> =
                p.blocks().iter().map(|b| b.iter().copied().collect()).collect();
            ensure!(seen.insert(canon), "s = {s}: duplicate {p}");
        }
    }
    for s in 0..=6u32 {
        let content = Multiindex::from_exps([
            (Label::from("e1"), s.div_ceil(2)),
            (Label::from("e2"), s / 2),
        ]);
        let ket = CanonicalKet::new(Vector::basis("e3"), content);
        let mut phi = LinearMapSpec::new(basis("W", &W), basis("V", &V));
        for (i, b) in ket.content.divisors().into_iter().enumerate() {
            let i = i as i64;
            let v = Vector::from_entries([(Label::from("f1"), q(1 + i % 3, 1)), (Label::from("f2"), q(2 * i + 1, 3))]);
            phi.insert(ket.with_content(b), v).unwrap();
        }
        let (_, terms) = promote_counted(&phi, &BangElement::from_ket(ket), CAP).map_err(|e| e.to_string())?;
        ensure!(terms as u128 == EXPECTED[s as usize], "s = {s}: {terms} pre-merge terms");
    }
    Ok("s <= 8 partitions, s <= 6 pre-merge terms".into())
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run_bang(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_bang")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap_or(-1))
}

fn criterion_11() -> Check {
    let session = golden("session.bang");
    let session = session.to_str().unwrap();
    for (format, expected) in [("text", "session.txt"), ("machine", "session.jsonl")] {
        let (out, code) = run_bang(&["--format", format, "--input", session]);
        ensure!(code == 0, "{format} run exited with {code}");
        let want = std::fs::read_to_string(golden(expected)).unwrap();
        ensure!(out == want, "{format} output differs from {expected}");
    }
    let examples = golden("worked_examples.bang");
    let (out, code) = run_bang(&["--check", "--input", examples.to_str().unwrap()]);
    ensure!(code == 0, "--check exited with {code}:\n{out}");
    let summary = out.lines().last().unwrap_or_default().to_string();
    ensure!(summary.ends_with(" 0 failed"), "{summary}");
    Ok(summary)
}

fn report(line: String) {
    use std::io::Write;
    let _ = writeln!(std::io::stderr(), "{line}");
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("coalgebra axioms", criterion_1),
        ("dereliction table", criterion_2),
        ("pairing consistency", criterion_3),
        ("fraction normalization", criterion_4),
        ("lifting factorization", criterion_5),
        ("lifting is a coalgebra morphism", criterion_6),
        ("oracle equivalence", criterion_7),
        ("recursion identity", criterion_8),
        ("functoriality", criterion_9),
        ("partition counts", criterion_10),
        ("cli golden and check", criterion_11),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match result {
            Ok(detail) => report(format!("PASS {:>2} {name}: {detail} ({ms} ms)", i + 1)),
            Err(why) => {
                report(format!("FAIL {:>2} {name}: {why} ({ms} ms)", i + 1));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
