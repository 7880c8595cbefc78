//! Seeded specializations, trial runs, t-scaling degree probes and the
//! JSON trial summary.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use serde::Serialize;

use crate::error::{ElimError, Result};
use crate::exactalg::UniPoly;
use crate::identities::{coeff_slots, evaluate, ternary_form, Evaluation, IdentityId, IdentityRing};
use crate::multipoly::MultiPoly;

pub const MAX_REROLLS: u32 = 32;
pub const DEFAULT_COEFF_BOUND: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Integer,
    /// Coefficients are integer polynomials in x; U_{i,j} gets degree <= i,
    /// the exponent of X1 in its monomial.
    UniPolyInX,
    /// Integer coefficients, with every coefficient of form `component`
    /// multiplied by t.
    TScalingProbe { component: usize },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Integer => f.write_str("integer"),
            Mode::UniPolyInX => f.write_str("x"),
            Mode::TScalingProbe { component } => write!(f, "t-probe:{component}"),
        }
    }
}

impl FromStr for Mode {
    type Err = ElimError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integer" | "int" | "z" => Ok(Mode::Integer),
            "x" | "zx" | "unipoly" => Ok(Mode::UniPolyInX),
            _ => match s.strip_prefix("t-probe:").or_else(|| s.strip_prefix("t:")) {
                Some(k) => k
                    .parse()
                    .map(|component| Mode::TScalingProbe { component })
                    .map_err(|_| ElimError::InvalidArgument(format!("bad probe component in '{s}'"))),
                None => Err(ElimError::InvalidArgument(format!(
                    "unknown mode '{s}' (integer, x, t-probe:<k>)"
                ))),
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecializationSpec {
    pub mode: Mode,
    pub seed: u64,
    pub coeff_bound: i64,
}

impl SpecializationSpec {
    pub fn new(mode: Mode, seed: u64) -> Self {
        SpecializationSpec {
            mode,
            seed,
            coeff_bound: DEFAULT_COEFF_BOUND,
        }
    }

    fn with_seed(self, seed: u64) -> Self {
        SpecializationSpec { seed, ..self }
    }
}

/// Specialized forms, one per polynomial of the identity.
#[derive(Clone, Debug)]
pub enum Specialization {
    Integer(Vec<MultiPoly<BigInt>>),
    Poly(Vec<MultiPoly<UniPoly>>),
}

fn draw(rng: &mut Xoshiro256StarStar, bound: i64, nonzero: bool) -> BigInt {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 || !nonzero {
            return BigInt::from(v);
        }
    }
}

/// Coefficients of one form in `coeff_slots` order.
fn int_coeffs(rng: &mut Xoshiro256StarStar, d: u32, bound: i64) -> Vec<BigInt> {
    coeff_slots(d)
        .into_iter()
        .map(|(i, j)| draw(rng, bound, i == 0 && j == 0))
        .collect()
}

fn x_coeffs(rng: &mut Xoshiro256StarStar, d: u32, bound: i64) -> Vec<UniPoly> {
    coeff_slots(d)
        .into_iter()
        .map(|(i, _)| {
            // top x-coefficient nonzero so the caps are attained
            let cs = (0..=i).map(|e| draw(rng, bound, e == i)).collect();
            UniPoly::new(cs)
        })
        .collect()
}

/// Deterministic in `spec.seed`. `poly_degrees` are the degrees of the
/// forms themselves (see `IdentityId::poly_degrees`).
pub fn gen_specialization(poly_degrees: &[u32], spec: &SpecializationSpec) -> Result<Specialization> {
    if spec.coeff_bound < 2 {
        return Err(ElimError::InvalidArgument("coeff_bound must be at least 2".into()));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(spec.seed);
    let b = spec.coeff_bound;
    Ok(match spec.mode {
        Mode::Integer => Specialization::Integer(
            poly_degrees
                .iter()
                .map(|&d| ternary_form(&int_coeffs(&mut rng, d, b), d))
                .collect(),
        ),
        Mode::UniPolyInX => Specialization::Poly(
            poly_degrees
                .iter()
                .map(|&d| ternary_form(&x_coeffs(&mut rng, d, b), d))
                .collect(),
        ),
        Mode::TScalingProbe { component } => {
            if component >= poly_degrees.len() {
                return Err(ElimError::InvalidArgument(format!(
                    "probe component {component} out of range (0..{})",
                    poly_degrees.len()
                )));
            }
            Specialization::Poly(
                poly_degrees
                    .iter()
                    .enumerate()
                    .map(|(k, &d)| {
                        let e = usize::from(k == component);
                        let cs: Vec<UniPoly> = int_coeffs(&mut rng, d, b)
                            .into_iter()
                            .map(|c| UniPoly::monomial(c, e))
                            .collect();
                        ternary_form(&cs, d)
                    })
                    .collect(),
            )
        }
    })
}

// ---------------------------------------------------------------------------
// degree statements

/// Exponent of t in quantity `quantity` when form `component` is scaled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contract {
    pub quantity: &'static str,
    pub exponents: Vec<u64>,
}

fn contract(quantity: &'static str, exponents: Vec<u32>) -> Contract {
    Contract {
        quantity,
        exponents: exponents.into_iter().map(u64::from).collect(),
    }
}

/// Multidegree statements for `id` at `degs`, one exponent per form.
pub fn contracts(id: IdentityId, degs: &[u32]) -> Vec<Contract> {
    use IdentityId::*;
    match id {
        I1 => {
            let (a, b, c, d) = (degs[0], degs[1], degs[2], degs[3]);
            vec![contract("iterated", vec![b * c * d, a * c * d, a * b * d, a * b * c])]
        }
        I2 => {
            let (a, b, c) = (degs[0], degs[1], degs[2]);
            vec![contract("iterated", vec![2 * a * b * c, a * a * c, a * a * b])]
        }
        I3 => {
            let (a, b, c) = (degs[0], degs[1], degs[2]);
            vec![contract(
                "iterated",
                vec![2 * b * c * (a - 1), a * (a - 1) * c, a * (a - 1) * b],
            )]
        }
        I4 => {
            let (a, b) = (degs[0], degs[1]);
            vec![contract(
                "iterated",
                vec![2 * b * (a - 1) * (b - 1), 2 * a * (a - 1) * (b - 1)],
            )]
        }
        I5 => {
            let (a, b) = (degs[0], degs[1]);
            vec![
                contract("iterated", vec![3 * a * b * (a - 1), a * a * (a - 1)]),
                contract("T", vec![(3 * a - 1) * (a - 2) * b, a * (a - 1) * (a - 2)]),
            ]
        }
        I6 => {
            let (a, b) = (degs[0], degs[1]);
            vec![contract("iterated", vec![2 * b * (a * b - 1), 2 * a * (a * b - 1)])]
        }
        I7 => vec![],
        I8 => {
            let (a, b) = (degs[0], degs[1]);
            vec![contract(
                "D",
                vec![(2 * a - 1) * b * (b - 1) / 2, (2 * b - 1) * a * (a - 1) / 2],
            )]
        }
        I9 => {
            let d = degs[0];
            vec![contract("iterated", vec![4 * (d - 1) * (d * d - d - 1)])]
        }
        I10 => {
            let d = degs[0];
            vec![contract("F", vec![3 * d * (d - 2)])]
        }
        I11 => {
            let d = degs[0];
            vec![contract("R(P)", vec![2 * (2 * d - 3) * (d * d - 3 * d + 1)])]
        }
        I12 => {
            let d = degs[0];
            vec![
                contract("R(P)", vec![2 * (2 * d - 3) * (d * d - 3 * d + 1)]),
                contract("U", vec![2 * d * (d - 2) * (d - 3)]),
            ]
        }
        I13 => {
            let d = degs[0];
            vec![
                contract("iterated", vec![4 * (d - 1) * (d * d - d - 1)]),
                contract("F", vec![3 * d * (d - 2)]),
                contract("U", vec![2 * d * (d - 2) * (d - 3)]),
            ]
        }
        I14 => vec![],
    }
}

/// Upper bounds on x-degrees in the UniPolyInX setup.
pub fn x_degree_bounds(id: IdentityId, degs: &[u32]) -> Vec<(&'static str, u64)> {
    use IdentityId::*;
    let b = |q: &'static str, v: u32| (q, u64::from(v));
    match id {
        I1 => vec![b("iterated", degs.iter().product())],
        I6 => {
            let n = degs[0] * degs[1];
            vec![b("iterated", n * (n - 1))]
        }
        I9 | I13 => {
            let d = degs[0];
            let mut v = vec![
                b("iterated", d * (d - 1) * (d * d - d - 1)),
                b("Disc(P)", d * (d - 1) * (d - 1)),
            ];
            if id == I13 {
                v.push(b("F", d * (d - 1) * (d - 2)));
                v.push(b("U", d * (d - 1) * (d - 2) * (d - 3) / 2));
            }
            v
        }
        I10 => {
            let d = degs[0];
            vec![b("F", d * (d - 1) * (d - 2))]
        }
        I12 => {
            let d = degs[0];
            vec![b("U", d * (d - 1) * (d - 2) * (d - 3) / 2)]
        }
        _ => vec![],
    }
}

// ---------------------------------------------------------------------------
// single evaluation

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Equal,
    Mismatch,
    DegenerateInput,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquationReport {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub name: String,
    pub value: String,
    pub multiplicity: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// quantity is exactly c t^expected
    TExponent,
    /// x-degree at most expected
    XBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeCheck {
    pub quantity: String,
    pub kind: CheckKind,
    pub expected: u64,
    pub observed: Option<u64>,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub degrees: Vec<u32>,
    pub mode: String,
    pub seed: u64,
    pub verdict: Verdict,
    pub detail: Option<String>,
    pub equations: Vec<EquationReport>,
    pub factors: Vec<FactorReport>,
    pub degree_checks: Vec<DegreeCheck>,
}

impl IdentityReport {
    /// Equal verdict and every degree check satisfied.
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Equal && self.degree_checks.iter().all(|c| c.ok)
    }

    fn failure_detail(&self) -> String {
        if let Some(d) = &self.detail {
            return d.clone();
        }
        let mut parts: Vec<String> = self
            .equations
            .iter()
            .filter(|e| !e.equal)
            .map(|e| format!("mismatch: {}", e.label))
            .collect();
        parts.extend(self.degree_checks.iter().filter(|c| !c.ok).map(|c| {
            format!(
                "{:?} on {}: expected {}, observed {:?}",
                c.kind, c.quantity, c.expected, c.observed
            )
        }));
        parts.join("; ")
    }
}

fn report_from<R: IdentityRing>(
    id: IdentityId,
    degs: &[u32],
    spec: &SpecializationSpec,
    res: Result<Evaluation<R>>,
) -> IdentityReport {
    let mut rep = IdentityReport {
        identity: id,
        degrees: degs.to_vec(),
        mode: spec.mode.to_string(),
        seed: spec.seed,
        verdict: Verdict::Equal,
        detail: None,
        equations: vec![],
        factors: vec![],
        degree_checks: vec![],
    };
    let ev = match res {
        Ok(ev) => ev,
        Err(ElimError::DegenerateInput(msg)) => {
            rep.verdict = Verdict::DegenerateInput;
            rep.detail = Some(msg);
            return rep;
        }
        Err(e) => {
            rep.verdict = Verdict::Mismatch;
            rep.detail = Some(e.to_string());
            return rep;
        }
    };
    for e in &ev.equations {
        rep.equations.push(EquationReport {
            label: e.label.clone(),
            lhs: e.lhs.to_string(),
            rhs: e.rhs.to_string(),
            equal: e.lhs == e.rhs,
        });
    }
    if !ev.all_equal() {
        rep.verdict = Verdict::Mismatch;
    }
    for q in &ev.quantities {
        rep.factors.push(FactorReport {
            name: q.name.to_string(),
            value: q.value.to_string(),
            multiplicity: q.multiplicity,
        });
    }
    match spec.mode {
        Mode::Integer => {}
        Mode::TScalingProbe { component } => {
            for c in contracts(id, degs) {
                let observed = ev.quantity(c.quantity).and_then(|v| v.monomial_exponent()).map(|e| e as u64);
                let expected = c.exponents[component];
                rep.degree_checks.push(DegreeCheck {
                    quantity: c.quantity.to_string(),
                    kind: CheckKind::TExponent,
                    expected,
                    observed,
                    ok: observed == Some(expected),
                });
            }
        }
        Mode::UniPolyInX => {
            for (q, bound) in x_degree_bounds(id, degs) {
                let observed = ev.quantity(q).and_then(|v| v.param_degree()).map(|e| e as u64);
                rep.degree_checks.push(DegreeCheck {
                    quantity: q.to_string(),
                    kind: CheckKind::XBound,
                    expected: bound,
                    observed,
                    ok: observed.is_some_and(|o| o <= bound),
                });
            }
        }
    }
    rep
}

/// Evaluates `id` once on the specialization drawn from `spec`.
pub fn identity_eval(id: IdentityId, degs: &[u32], spec: &SpecializationSpec) -> Result<IdentityReport> {
    id.validate(degs)?;
    let pd = id.poly_degrees(degs);
    Ok(match gen_specialization(&pd, spec)? {
        Specialization::Integer(ps) => report_from(id, degs, spec, evaluate::<BigInt>(id, degs, &ps)),
        Specialization::Poly(ps) => report_from(id, degs, spec, evaluate::<UniPoly>(id, degs, &ps)),
    })
}

// ---------------------------------------------------------------------------
// trials

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub seed: u64,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Timings {
    pub total: f64,
    pub per_trial: Vec<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialSummary {
    pub identity: IdentityId,
    pub degrees: Vec<u32>,
    pub mode: String,
    pub seed: u64,
    pub trials: usize,
    pub rerolls: u32,
    pub failures: Vec<Failure>,
    /// Wall time is not reproducible, so it stays `None` unless asked for.
    pub timings_ms: Option<Timings>,
}

impl TrialSummary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds `other` (same identity and degrees) into `self`.
    pub fn merge(&mut self, other: TrialSummary) {
        self.trials += other.trials;
        self.rerolls += other.rerolls;
        self.failures.extend(other.failures);
        if let (Some(a), Some(b)) = (&mut self.timings_ms, other.timings_ms) {
            a.total += b.total;
            a.per_trial.extend(b.per_trial);
        }
        if self.mode != other.mode {
            self.mode = merged_mode(&self.mode, &other.mode);
        }
    }
}

fn merged_mode(a: &str, b: &str) -> String {
    let base = |s: &str| s.split(':').next().unwrap_or(s).to_string();
    if base(a) == base(b) {
        base(a)
    } else {
        format!("{a}+{b}")
    }
}

/// Seed of trial `index` under base seed `seed`.
pub fn trial_seed(seed: u64, index: usize) -> u64 {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    rng.jump();
    for _ in 0..index {
        rng.next_u64();
    }
    rng.next_u64()
}

struct TrialOutcome {
    rerolls: u32,
    failure: Option<Failure>,
    millis: f64,
}

fn run_one(id: IdentityId, degs: &[u32], spec: &SpecializationSpec) -> TrialOutcome {
    let start = Instant::now();
    let mut reroll_rng = Xoshiro256StarStar::seed_from_u64(spec.seed);
    let mut seed = spec.seed;
    let mut rerolls = 0;
    let failure = loop {
        match identity_eval(id, degs, &spec.with_seed(seed)) {
            Err(e) => break Some(Failure { seed, detail: e.to_string() }),
            Ok(rep) if rep.verdict == Verdict::DegenerateInput => {
                if rerolls == MAX_REROLLS {
                    break Some(Failure {
                        seed,
                        detail: format!(
                            "still degenerate after {MAX_REROLLS} re-rolls: {}",
                            rep.detail.unwrap_or_default()
                        ),
                    });
                }
                rerolls += 1;
                seed = reroll_rng.next_u64();
            }
            Ok(rep) => {
                break (!rep.passed()).then(|| Failure {
                    seed,
                    detail: rep.failure_detail(),
                })
            }
        }
    };
    TrialOutcome {
        rerolls,
        failure,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Runs `n_trials` evaluations with seeds derived from `spec.seed`, on up to
/// `jobs` threads. The result does not depend on `jobs`.
pub fn run_trials_jobs(
    id: IdentityId,
    degs: &[u32],
    n_trials: usize,
    spec: &SpecializationSpec,
    jobs: usize,
) -> Result<TrialSummary> {
    if n_trials == 0 {
        return Err(ElimError::InvalidArgument("need at least one trial".into()));
    }
    id.validate(degs)?;
    if let Mode::TScalingProbe { component } = spec.mode {
        if component >= id.poly_degrees(degs).len() {
            return Err(ElimError::InvalidArgument(format!("probe component {component} out of range")));
        }
    }
    let start = Instant::now();
    let seeds: Vec<u64> = (0..n_trials).map(|i| trial_seed(spec.seed, i)).collect();
    let jobs = jobs.clamp(1, n_trials);
    let outcomes: Vec<TrialOutcome> = if jobs == 1 {
        seeds.iter().map(|&s| run_one(id, degs, &spec.with_seed(s))).collect()
    } else {
        let mut slots: Vec<Option<TrialOutcome>> = (0..n_trials).map(|_| None).collect();
        let chunk = n_trials.div_ceil(jobs);
        std::thread::scope(|sc| {
            for (seed_chunk, out_chunk) in seeds.chunks(chunk).zip(slots.chunks_mut(chunk)) {
                sc.spawn(move || {
                    for (s, out) in seed_chunk.iter().zip(out_chunk) {
                        *out = Some(run_one(id, degs, &spec.with_seed(*s)));
                    }
                });
            }
        });
        slots.into_iter().map(|o| o.expect("every trial ran")).collect()
    };
    Ok(TrialSummary {
        identity: id,
        degrees: degs.to_vec(),
        mode: spec.mode.to_string(),
        seed: spec.seed,
        trials: n_trials,
        rerolls: outcomes.iter().map(|o| o.rerolls).sum(),
        failures: outcomes.iter().filter_map(|o| o.failure.clone()).collect(),
        timings_ms: Some(Timings {
            total: start.elapsed().as_secs_f64() * 1e3,
            per_trial: outcomes.iter().map(|o| o.millis).collect(),
        }),
    })
}

pub fn run_trials(id: IdentityId, degs: &[u32], n_trials: usize, spec: &SpecializationSpec) -> Result<TrialSummary> {
    run_trials_jobs(id, degs, n_trials, spec, 1)
}

/// Probes form `component` once and checks that quantity `quantity` is
/// c t^expected. Degenerate draws are re-rolled.
pub fn check_degree_of(
    id: IdentityId,
    degs: &[u32],
    component: usize,
    quantity: &str,
    expected: u64,
    seed: u64,
) -> Result<bool> {
    let spec = SpecializationSpec::new(Mode::TScalingProbe { component }, seed);
    let mut reroll_rng = Xoshiro256StarStar::seed_from_u64(seed);
    for _ in 0..=MAX_REROLLS {
        let rep = identity_eval(id, degs, &spec.with_seed(reroll_rng.next_u64()))?;
        if rep.verdict == Verdict::DegenerateInput {
            continue;
        }
        if rep.verdict != Verdict::Equal {
            return Ok(false);
        }
        return Ok(rep
            .degree_checks
            .iter()
            .any(|c| c.quantity == quantity && c.observed == Some(expected)));
    }
    Err(ElimError::DegenerateInput(format!(
        "no usable probe after {MAX_REROLLS} re-rolls"
    )))
}

/// `check_degree_of` on the first quantity `contracts` lists for `id`.
pub fn check_degree(id: IdentityId, degs: &[u32], component: usize, expected: u64, seed: u64) -> Result<bool> {
    let c = contracts(id, degs)
        .into_iter()
        .next()
        .ok_or_else(|| ElimError::InvalidArgument(format!("{id} states no multidegree")))?;
    check_degree_of(id, degs, component, c.quantity, expected, seed)
}
