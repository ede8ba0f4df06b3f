//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use densem_cli::commands::{cmd_entail, sentence_meaning, ComposeOptions, LowerBound};
use densem_cli::{load_lexicon, Lexicon};
use densem_core::entailment::{
    bayes_transform, from_bloch, general_error, is_k_hyponym, k_max, to_bloch, NormalizationStrategy,
};
use densem_core::pregroup::{parse_type, reduce, PregroupType, ReductionPattern};
use densem_core::psd::{loewner_leq, satisfaction, SymMatrix, Tolerances};
use densem_core::random::{
    projector_onto, random_density, random_nested_pair, random_projector, random_psd, random_psd_rank,
    random_unit_vector, random_vector, seeded, SeededRng,
};
use densem_core::semantics::frobenius::{copy, merge, swap};
use densem_core::semantics::{evaluate, frobenius_mu, snake_check, DensityTensor, SpaceAssignment};
use nalgebra::{Cholesky, DMatrix, SymmetricEigen};
use rand::Rng;

type Check = Result<String, String>;
type Criterion = fn() -> Check;

const CASES: u64 = 1000;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn to_na(m: &SymMatrix) -> DMatrix<f64> {
    DMatrix::from_row_slice(m.dim(), m.dim(), m.as_slice())
}

fn na_min_eig(m: &SymMatrix) -> f64 {
    SymmetricEigen::new(to_na(m)).eigenvalues.min()
}

fn na_max_eig(m: &DMatrix<f64>) -> f64 {
    SymmetricEigen::new(m.clone()).eigenvalues.max()
}

fn lexicon(name: &str) -> Lexicon {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../lexicons")
        .join(name);
    load_lexicon(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn opts(target: &str, frobenius: bool) -> ComposeOptions {
    ComposeOptions {
        target: target.into(),
        frobenius_pronouns: frobenius,
        normalize: NormalizationStrategy::None,
    }
}

fn meaning(lex: &Lexicon, sentence: &str, o: &ComposeOptions) -> Result<SymMatrix, String> {
    sentence_meaning(lex, sentence, o)
        .map(|(_, m)| m.into_matrix())
        .map_err(|e| format!("{sentence}: {e}"))
}

fn entail_k(lex: &Lexicon, a: &str, b: &str) -> Result<(f64, LowerBound, Option<bool>), String> {
    let r = cmd_entail(lex, a, b, &opts("s", false)).map_err(|e| e.to_string())?;
    let k = r.result.k_max.ok_or("supports not contained")?;
    Ok((k, r.lower_bound, r.holds_at_lower_bound))
}

/// Largest `k` with `B - kA` positive on the range of `B`, by bisection with
/// Cholesky as the positivity test.
fn k_bisect(a: &SymMatrix, b: &SymMatrix) -> f64 {
    let (na, nb) = (to_na(a), to_na(b));
    let eig = SymmetricEigen::new(nb.clone());
    let lmax = eig.eigenvalues.max();
    let keep: Vec<usize> = (0..b.dim()).filter(|&i| eig.eigenvalues[i] > 1e-10 * lmax).collect();
    let u = DMatrix::from_fn(b.dim(), keep.len(), |r, c| eig.eigenvectors[(r, keep[c])]);
    let (ar, br) = (u.transpose() * &na * &u, u.transpose() * &nb * &u);
    let positive = |k: f64| Cholesky::new(&br - &ar * k).is_some();
    let (mut lo, mut hi) = (0.0, 1.0);
    while positive(hi) {
        lo = hi;
        hi *= 2.0;
    }
    while hi - lo > 1e-15 * hi {
        let mid = 0.5 * (lo + hi);
        if positive(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Maximality certificate: positive at `k`, not positive just above it.
fn certify_maximal(a: &SymMatrix, b: &SymMatrix, k: f64) -> Result<(), String> {
    ensure(is_k_hyponym(a, b, k, &tol()).unwrap(), || {
        format!("not a hyponym at {k}")
    })?;
    let above = k * (1.0 + 1e-4);
    ensure(!is_k_hyponym(a, b, above, &tol()).unwrap(), || {
        format!("still a hyponym at {above}")
    })
}

fn c1_pet_dog() -> Check {
    let dog = SymMatrix::outer(&[1.0, 0.0]);
    let cat = SymMatrix::outer(&[0.0, 1.0]);
    let pet = dog.scale(0.5).add(&cat.scale(0.5)).unwrap();
    let mut best = Duration::MAX;
    let mut k = 0.0;
    for _ in 0..10 {
        let t = Instant::now();
        k = k_max(&dog, &pet, &tol()).unwrap().k_max.unwrap();
        best = best.min(t.elapsed());
    }
    ensure((k - 0.5).abs() <= 1e-9, || format!("k_max = {k}"))?;
    ensure(best < Duration::from_millis(1), || format!("took {best:?}"))?;
    Ok(format!("k_max = {k}, {best:?}"))
}

fn c2_two_state_formula() -> Check {
    let mut rng = seeded(2);
    let mut worst: f64 = 0.0;
    for i in 0..50 {
        let n = rng.random_range(2..=6);
        let u = random_unit_vector(&mut rng, n);
        let mut w = random_vector(&mut rng, n);
        let dot: f64 = u.iter().zip(&w).map(|(a, b)| a * b).sum();
        w.iter_mut().zip(&u).for_each(|(wi, ui)| *wi -= dot * ui);
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        w.iter_mut().for_each(|x| *x /= norm);
        let (r, s): (f64, f64) = (rng.random_range(0.01..0.99), rng.random_range(0.01..0.99));
        let mix = |p: f64| {
            SymMatrix::outer(&u)
                .scale(p)
                .add(&SymMatrix::outer(&w).scale(1.0 - p))
                .unwrap()
        };
        let expected = if r < s { r / s } else { (1.0 - r) / (1.0 - s) };
        let k = k_max(&mix(s), &mix(r), &tol()).unwrap().k_max.ok_or("absent")?;
        let err = (k - expected.min(1.0)).abs();
        worst = worst.max(err);
        ensure(err <= 1e-8, || {
            format!("pair {i}: r={r} s={s} k={k} expected {expected}")
        })?;
    }
    Ok(format!("50 pairs, max error {worst:.1e}"))
}

fn c3_counterexample() -> Check {
    let a = SymMatrix::diag(&[1.0, 1.0, 0.0]);
    let b = SymMatrix::diag(&[1.0, 0.0, 1.0]);
    let r = k_max(&a, &b, &tol()).unwrap();
    ensure(r.k_max.is_none() && !r.supports_contained, || format!("{r:?}"))?;
    let e = general_error(&a, &b, &tol()).unwrap();
    ensure(e.e == SymMatrix::diag(&[0.0, 1.0, 0.0]), || format!("E = {:?}", e.e))?;
    ensure(e.d == SymMatrix::diag(&[0.0, 0.0, 1.0]), || format!("D = {:?}", e.d))?;
    Ok("k_max absent, E = diag(0,1,0), D = diag(0,0,1)".into())
}

fn c4_scoff_eat() -> Check {
    let lex = lexicon("eating.json");
    let (k, bound, holds) = entail_k(&lex, "John scoffs cake", "John eats sweets")?;
    let LowerBound::Product(lb) = bound else {
        return Err(format!("lower bound {bound:?}"));
    };
    ensure((lb - 0.25).abs() <= 1e-9, || format!("lower bound {lb}"))?;
    ensure(holds == Some(true), || "not a hyponym at the lower bound".into())?;
    ensure(k >= 0.25 - 1e-9, || format!("k_max {k}"))?;
    Ok(format!("lower bound {lb}, k_max {k}"))
}

fn c5_truth_theoretic() -> Check {
    let lex = lexicon("truth.json");
    let o = opts("s", false);
    let annie = meaning(&lex, "Annie enjoys holidays", &o)?;
    let students = meaning(&lex, "Students enjoy holidays", &o)?;
    let (va, vs) = (annie.get(0, 0), students.get(0, 0));
    ensure((va - 1.0).abs() <= 1e-9, || format!("Annie enjoys holidays = {va}"))?;
    ensure((vs - 2.0 / 3.0).abs() <= 1e-9, || {
        format!("Students enjoy holidays = {vs}")
    })?;
    let (k, bound, _) = entail_k(&lex, "Annie enjoys holidays", "Students enjoy holidays")?;
    ensure((k - 2.0 / 3.0).abs() <= 1e-8, || format!("k_max {k}"))?;
    let LowerBound::Product(lb) = bound else {
        return Err(format!("lower bound {bound:?}"));
    };
    ensure((lb - 1.0 / 3.0).abs() <= 1e-8 && k > lb, || format!("lower bound {lb}"))?;
    Ok(format!("values {va}, {vs}; k_max {k} > lower bound {lb}"))
}

fn sentence_pair_maximal(lexicon_name: &str, a: &str, b: &str, expected: f64) -> Check {
    let lex = lexicon(lexicon_name);
    let (k, _, _) = entail_k(&lex, a, b)?;
    ensure((k - expected).abs() <= 1e-8, || format!("k_max {k}"))?;
    let o = opts("s", false);
    certify_maximal(&meaning(&lex, a, &o)?, &meaning(&lex, b, &o)?, k)?;
    Ok(format!("k_max {k}, maximal"))
}

fn c6_gretel() -> Check {
    sentence_pair_maximal("objects.json", "Gretel likes gingerbread", "Gretel likes sweets", 0.1)
}

fn c7_siblings() -> Check {
    sentence_pair_maximal(
        "siblings.json",
        "Gretel likes gingerbread",
        "the_siblings like sweets",
        0.25,
    )
}

fn c8_relative_clause() -> Check {
    let lex = lexicon("relative.json");
    let mut report = Vec::new();
    for frobenius in [true, false] {
        let o = opts("n", frobenius);
        let hypo = meaning(&lex, "elderly_ladies who own cats", &o)?;
        let hyper = meaning(&lex, "women who own animals", &o)?;
        let lo = na_min_eig(&hyper.sub_scaled(1.0 / 6.0, &hypo).unwrap());
        ensure(lo >= -1e-9, || {
            format!("min eigenvalue {lo} (frobenius route {frobenius})")
        })?;
        report.push(format!("{lo:.3e}"));
    }
    Ok(format!("min eigenvalue {} (both routes)", report.join(" / ")))
}

fn c9_oracle_suite() -> Check {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for seed in 0..500u64 {
        let mut rng = seeded(seed);
        let n = rng.random_range(2..=8);
        let b_rank = rng.random_range(1..=n);
        let a_rank = rng.random_range(1..=b_rank);
        let (a, b) = random_nested_pair(&mut rng, n, b_rank, a_rank);
        let raw = k_max(&a, &b, &tol())
            .unwrap()
            .raw_k
            .ok_or(format!("seed {seed}: absent"))?;
        let oracle = k_bisect(&a, &b);
        let rel = (raw - oracle).abs() / oracle;
        worst = worst.max(rel);
        ensure(rel <= 1e-8, || format!("seed {seed}: {raw} vs {oracle}"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("500 pairs, max relative error {worst:.1e}, {took:.2?}"))
}

/// A random density operator supported inside the support of `b`.
fn state_in_support(rng: &mut SeededRng, b: &SymMatrix) -> SymMatrix {
    let eig = SymmetricEigen::new(to_na(b));
    let lmax = eig.eigenvalues.max();
    let mut rho = SymMatrix::zeros(b.dim());
    let mut total = 0.0;
    for i in 0..b.dim() {
        if eig.eigenvalues[i] > 1e-10 * lmax {
            let v: Vec<f64> = eig.eigenvectors.column(i).iter().copied().collect();
            let w = rng.random_range(0.05..1.0);
            total += w;
            rho = rho.add(&SymMatrix::outer(&v).scale(w)).unwrap();
        }
    }
    rho.scale(1.0 / total)
}

fn nested(rng: &mut SeededRng, lo: usize, hi: usize) -> (SymMatrix, SymMatrix) {
    let n = rng.random_range(lo..=hi);
    let b_rank = rng.random_range(1..=n);
    let a_rank = rng.random_range(1..=b_rank);
    random_nested_pair(rng, n, b_rank, a_rank)
}

fn prop_reflexive(rng: &mut SeededRng) -> Result<(), String> {
    let n = rng.random_range(1..=8);
    let rank = rng.random_range(1..=n);
    let a = random_psd_rank(rng, n, rank);
    let k = k_max(&a, &a, &tol()).unwrap().k_max.ok_or("absent")?;
    ensure((k - 1.0).abs() <= 1e-8, || format!("k_max(A, A) = {k}"))
}

fn prop_transitive(rng: &mut SeededRng) -> Result<(), String> {
    let (a, b) = nested(rng, 2, 6);
    let c = if rng.random_bool(0.5) {
        random_psd(rng, b.dim())
    } else {
        b.add(&state_in_support(rng, &b)).unwrap()
    };
    let k = |x: &SymMatrix, y: &SymMatrix| k_max(x, y, &tol()).unwrap().k_max.ok_or("absent");
    let (ab, bc, ac) = (k(&a, &b)?, k(&b, &c)?, k(&a, &c)?);
    ensure(ac >= ab * bc - 1e-8, || format!("{ac} < {ab} * {bc}"))
}

fn prop_continuity(rng: &mut SeededRng) -> Result<(), String> {
    let delta = [1e-1, 1e-2, 1e-3][rng.random_range(0..3)];
    let (a, b) = nested(rng, 2, 6);
    let a2 = a.add(&state_in_support(rng, &b).scale(delta)).unwrap();
    let l1 = k_max(&a, &b, &tol()).unwrap().witness_eigenvalue.ok_or("absent")?;
    let l2 = k_max(&a2, &b, &tol()).unwrap().witness_eigenvalue.ok_or("absent")?;
    let nb = to_na(&b);
    let threshold = 1e-10 * na_max_eig(&nb);
    let pinv_max = na_max_eig(&nb.pseudo_inverse(threshold).unwrap());
    let (k1, k2) = (1.0 / l1, 1.0 / l2);
    let bound = delta * pinv_max / (l1 * l2) + 1e-8;
    ensure(k1 - k2 <= bound, || format!("k - k' = {} > {bound}", k1 - k2))
}

fn prop_trace_one(rng: &mut SeededRng) -> Result<(), String> {
    let n = rng.random_range(2..=6);
    let (r1, r2) = (rng.random_range(1..=n), rng.random_range(1..=n));
    let (rho, sigma) = (random_density(rng, n, r1), random_density(rng, n, r2));
    ensure(
        !loewner_leq(&rho, &sigma, &tol()).unwrap() && !loewner_leq(&sigma, &rho, &tol()).unwrap(),
        || "distinct densities are ordered".into(),
    )
}

fn prop_dhondt(rng: &mut SeededRng) -> Result<(), String> {
    let n = rng.random_range(2..=6);
    let a = random_psd(rng, n);
    let b = a.add(&random_psd_rank(rng, n, 1)).unwrap();
    let rank = rng.random_range(1..=n);
    let rho = random_density(rng, n, rank);
    let (sa, sb) = (
        satisfaction(&rho, &a, &tol()).unwrap(),
        satisfaction(&rho, &b, &tol()).unwrap(),
    );
    ensure(sa <= sb + 1e-12 * sb.max(1.0), || {
        format!("tr(rho A) = {sa} > tr(rho B) = {sb}")
    })?;
    // an unordered pair is separated by the most negative direction of C - A
    let c = random_psd(rng, n);
    if !loewner_leq(&a, &c, &tol()).unwrap() {
        let eig = SymmetricEigen::new(to_na(&c) - to_na(&a));
        let v: Vec<f64> = eig
            .eigenvectors
            .column(eig.eigenvalues.imin())
            .iter()
            .copied()
            .collect();
        let rho = SymMatrix::outer(&v);
        let (sa, sc) = (
            satisfaction(&rho, &a, &tol()).unwrap(),
            satisfaction(&rho, &c, &tol()).unwrap(),
        );
        ensure(sa > sc, || "unordered pair not separated".into())?;
    }
    Ok(())
}

fn prop_projections(rng: &mut SeededRng) -> Result<(), String> {
    let n = rng.random_range(2..=7);
    let big = rng.random_range(1..=n);
    let small = rng.random_range(1..=big);
    let q = random_projector(rng, n, big);
    let cols: Vec<Vec<f64>> = (0..small)
        .map(|_| {
            let v = random_vector(rng, n);
            (0..n).map(|i| (0..n).map(|j| q.get(i, j) * v[j]).sum()).collect()
        })
        .collect();
    let p = projector_onto(n, &cols);
    ensure(loewner_leq(&p, &q, &tol()).unwrap(), || {
        "subspace projector not below".into()
    })?;
    ensure(loewner_leq(&q, &p, &tol()).unwrap() == (small == big), || {
        "order not antisymmetric".into()
    })?;
    if big < n {
        let other = random_projector(rng, n, small);
        ensure(!loewner_leq(&other, &q, &tol()).unwrap(), || {
            "unrelated projector below".into()
        })?;
    }
    Ok(())
}

const TEMPLATES: [(&[&str], &str); 3] = [
    (&["n", "n.r s"], "s"),
    (&["n", "n.r s n.l", "n"], "s"),
    (&["n n.l", "n", "n.r s n.l", "n"], "s"),
];

struct Sentence {
    types: Vec<PregroupType>,
    pattern: ReductionPattern,
    spaces: SpaceAssignment,
    dims: Vec<Vec<usize>>,
}

fn random_sentence(rng: &mut SeededRng) -> Sentence {
    let (words, target) = TEMPLATES[rng.random_range(0..TEMPLATES.len())];
    let types: Vec<PregroupType> = words.iter().map(|t| parse_type(t).unwrap()).collect();
    let pattern = reduce(&types, &parse_type(target).unwrap()).unwrap();
    let spaces = SpaceAssignment::new()
        .with("n", rng.random_range(1..=2))
        .with("s", rng.random_range(1..=2));
    let dims = types.iter().map(|t| spaces.dims_of(t).unwrap()).collect();
    Sentence {
        types,
        pattern,
        spaces,
        dims,
    }
}

fn eval(s: &Sentence, words: &[SymMatrix]) -> SymMatrix {
    let dts: Vec<DensityTensor> = words
        .iter()
        .zip(&s.dims)
        .map(|(m, d)| DensityTensor::new(d.clone(), m.clone(), &tol()).unwrap())
        .collect();
    evaluate(&dts, &s.types, &s.pattern, &s.spaces).unwrap().into_matrix()
}

fn prop_sentence_bound(rng: &mut SeededRng) -> Result<(), String> {
    let s = random_sentence(rng);
    let (mut hypo, mut hyper, mut bound) = (Vec::new(), Vec::new(), 1.0);
    for d in &s.dims {
        let n: usize = d.iter().product();
        let b_rank = rng.random_range(1..=n);
        let a_rank = rng.random_range(1..=b_rank);
        let (a, b) = random_nested_pair(rng, n, b_rank, a_rank);
        bound *= k_max(&a, &b, &tol()).unwrap().k_max.ok_or("word pair absent")?;
        hypo.push(a);
        hyper.push(b);
    }
    let (sa, sb) = (eval(&s, &hypo), eval(&s, &hyper));
    ensure(is_k_hyponym(&sa, &sb, bound, &tol()).unwrap(), || {
        format!("not a hyponym at {bound}")
    })
}

fn prop_cpm_positive(rng: &mut SeededRng) -> Result<(), String> {
    let s = random_sentence(rng);
    let words: Vec<SymMatrix> = s
        .dims
        .iter()
        .map(|d| {
            let n: usize = d.iter().product();
            let rank = rng.random_range(1..=n);
            random_psd_rank(rng, n, rank)
        })
        .collect();
    let out = eval(&s, &words);
    let lo = na_min_eig(&out);
    ensure(lo >= -1e-9 * out.frobenius_norm().max(1.0), || {
        format!("min eigenvalue {lo}")
    })
}

fn prop_frobenius(rng: &mut SeededRng) -> Result<(), String> {
    let d = rng.random_range(1..=6);
    let v = random_vector(rng, d);
    ensure(merge(&copy(&v), d) == v, || {
        "merge after copy is not the identity".into()
    })?;
    let w = random_vector(rng, d);
    let vw: Vec<f64> = (0..d * d).map(|k| v[k / d] * w[k % d]).collect();
    ensure(merge(&swap(&vw, d), d) == merge(&vw, d), || {
        "merge not commutative".into()
    })?;
    let rank = rng.random_range(1..=d);
    let rho = DensityTensor::new(vec![d], random_psd_rank(rng, d, rank), &tol()).unwrap();
    let sigma = DensityTensor::new(vec![d], random_psd(rng, d), &tol()).unwrap();
    ensure(
        frobenius_mu(&rho, &sigma).unwrap() == frobenius_mu(&sigma, &rho).unwrap(),
        || "doubled merge not commutative".into(),
    )
}

fn prop_bayes(rng: &mut SeededRng) -> Result<(), String> {
    let n = rng.random_range(1..=7);
    let m = random_psd(rng, n);
    let m = m.scale(rng.random_range(0.1..=1.0) / na_max_eig(&to_na(&m)));
    let out = bayes_transform(&m, &tol()).unwrap();
    let mut src: Vec<f64> = SymmetricEigen::new(to_na(&m)).eigenvalues.iter().copied().collect();
    let mut got: Vec<f64> = SymmetricEigen::new(to_na(&out)).eigenvalues.iter().copied().collect();
    src.sort_by(|a, b| b.total_cmp(a));
    got.sort_by(|a, b| b.total_cmp(a));
    let mut run = 1.0;
    for (i, &d) in src.iter().enumerate() {
        run *= d.max(0.0);
        ensure((got[i] - run).abs() <= 1e-10, || {
            format!("eigenvalue {i}: {} vs {run}", got[i])
        })?;
    }
    Ok(())
}

fn prop_bloch(rng: &mut SeededRng) -> Result<(), String> {
    let (x, z) = loop {
        let (x, z): (f64, f64) = (rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
        if x * x + z * z <= 1.0 {
            break (x, z);
        }
    };
    let (x2, z2) = to_bloch(&from_bloch(x, z).unwrap(), &tol()).unwrap();
    ensure((x - x2).abs() <= 1e-12 && (z - z2).abs() <= 1e-12, || {
        format!("({x}, {z}) -> ({x2}, {z2})")
    })
}

type Property = fn(&mut SeededRng) -> Result<(), String>;

fn c10_properties() -> Check {
    let props: [(&str, Property); 11] = [
        ("reflexivity", prop_reflexive),
        ("transitivity", prop_transitive),
        ("continuity", prop_continuity),
        ("trace-1 incomparability", prop_trace_one),
        ("satisfaction monotonicity", prop_dhondt),
        ("projection order", prop_projections),
        ("sentence lower bound", prop_sentence_bound),
        ("CPM positivity", prop_cpm_positive),
        ("Frobenius", prop_frobenius),
        ("bayes running product", prop_bayes),
        ("Bloch roundtrip", prop_bloch),
    ];
    for (pi, (name, prop)) in props.iter().enumerate() {
        for case in 0..CASES {
            let mut rng = seeded(1_000_000 * (pi as u64 + 1) + case);
            prop(&mut rng).map_err(|e| format!("{name}, case {case}: {e}"))?;
        }
    }
    for d in 1..=8 {
        ensure(snake_check(d), || format!("snake equations fail in dimension {d}"))?;
    }
    Ok(format!("{} properties x {CASES} cases, snake dims 1-8", props.len()))
}

fn c11_disc() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().join("disc.csv");
    let theta = std::f64::consts::PI / 5.0;
    let (tx, tz) = (0.75 * theta.sin(), 0.75 * theta.cos());
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_densem"))
        .args(["disc", "--target-x", &tx.to_string(), "--target-z", &tz.to_string()])
        .args(["--resolution", "101", "--normalize", "maxeig", "--out"])
        .arg(&out)
        .output()
        .map_err(|e| e.to_string())?;
    let took = start.elapsed();
    ensure(status.status.success(), || {
        String::from_utf8_lossy(&status.stderr).into_owned()
    })?;
    let csv = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    let nearest = csv
        .lines()
        .skip(1)
        .map(|l| {
            let v: Vec<f64> = l.split(',').map(|c| c.parse().unwrap()).collect();
            (v[0], v[1], v[2])
        })
        .min_by(|a, b| {
            let da = (a.0 - tx).powi(2) + (a.1 - tz).powi(2);
            let db = (b.0 - tx).powi(2) + (b.1 - tz).powi(2);
            da.total_cmp(&db)
        })
        .ok_or("empty grid")?;
    ensure(took < Duration::from_secs(5), || format!("took {took:?}"))?;
    ensure((nearest.2 - 1.0).abs() <= 1e-9, || {
        format!(
            "k = {} at nearest lattice point ({}, {}) to target ({tx:.5}, {tz:.5}); {took:.2?}",
            nearest.2, nearest.0, nearest.1
        )
    })?;
    Ok(format!("k = 1 at ({}, {}), {took:.2?}", nearest.0, nearest.1))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("pet/dog strength", c1_pet_dog),
        ("two-state mixture formula", c2_two_state_formula),
        ("non-nested supports and error terms", c3_counterexample),
        ("scoff/eat lower bound", c4_scoff_eat),
        ("truth-theoretic sentences", c5_truth_theoretic),
        ("Gretel likes sweets", c6_gretel),
        ("siblings like sweets", c7_siblings),
        ("relative clause hyponymy", c8_relative_clause),
        ("closed form vs bisection", c9_oracle_suite),
        ("property suites", c10_properties),
        ("Bloch disc grid", c11_disc),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
