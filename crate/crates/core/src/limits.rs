//! Infinite spectra and limiting temperatures.
//!
//! A [`Generator`] is a finite explicit head flanked by optional affine tails
//! `E_n = α n + β`, `S_n = γ n + δ`. Along a tail `F_n/T` is affine in `n` with
//! slope `(α − Tγ)/T`, so the sign of that slope certifies exactly whether the
//! tropical sum `min_n F_n/T` exists. The threshold `T = α/γ` is the limiting
//! temperature of that tail.

use std::cmp::Ordering;
use std::io::Read;

use serde_json::Value;

use crate::envelope::Endpoint;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::spectrum::{levels_from_json, scalar_from_json, Level, Spectrum};
use crate::tropical::log_sum_exp;

/// Affine level rule `E_n = energy_slope·n + energy_intercept`,
/// `S_n = entropy_slope·n + entropy_intercept`, valid from index `from` outward.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineTail<S> {
    pub energy_slope: S,
    pub energy_intercept: S,
    pub entropy_slope: S,
    pub entropy_intercept: S,
    pub from: i64,
}

impl<S: Scalar> AffineTail<S> {
    pub fn level(&self, n: i64) -> Level<S> {
        let n = S::from_i64(n).expect("index representable");
        Level::new(
            self.energy_slope.clone() * n.clone() + self.energy_intercept.clone(),
            self.entropy_slope.clone() * n + self.entropy_intercept.clone(),
        )
    }

    /// Slope in `n` of `F_n/T` along the tail.
    fn reduced_slope(&self, temperature: &S) -> S {
        (self.energy_slope.clone() - temperature.clone() * self.entropy_slope.clone())
            / temperature.clone()
    }

    /// `α/γ`, the temperature at which the tail's free energies stop drifting.
    fn threshold(&self) -> Option<S> {
        (!self.entropy_slope.is_zero())
            .then(|| self.energy_slope.clone() / self.entropy_slope.clone())
    }
}

/// Serialized description of an infinite (or finite) spectrum.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec<S> {
    /// `E_n = e0·n`, `S_n = E_n/a` for `n ≥ 1`.
    LinearRatio { e0: S, a: S },
    /// Levels `1..from` from the table, then the tail rule (if any).
    TablePlusTail {
        head: Vec<Level<S>>,
        tail: Option<AffineTail<S>>,
    },
    /// Lower tail for `n ≤ negative_tail.from`, then the head, then the optional upper tail.
    TwoSided {
        head: Vec<Level<S>>,
        negative_tail: AffineTail<S>,
        positive_tail: Option<AffineTail<S>>,
    },
}

/// Validated generator with contiguous indices and strictly increasing energies.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator<S> {
    lower_tail: Option<AffineTail<S>>,
    head: Vec<Level<S>>,
    head_start: i64,
    upper_tail: Option<AffineTail<S>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidGenerator(msg.into())
}

impl<S: Scalar> Generator<S> {
    pub fn from_spec(spec: GeneratorSpec<S>) -> Result<Self> {
        let generator = match spec {
            GeneratorSpec::LinearRatio { e0, a } => {
                if e0 <= S::zero() {
                    return Err(invalid("e0 must be positive"));
                }
                if a.is_zero() {
                    return Err(invalid("a must be nonzero"));
                }
                Generator {
                    lower_tail: None,
                    head: Vec::new(),
                    head_start: 1,
                    upper_tail: Some(AffineTail {
                        entropy_slope: e0.clone() / a,
                        energy_slope: e0,
                        energy_intercept: S::zero(),
                        entropy_intercept: S::zero(),
                        from: 1,
                    }),
                }
            }
            GeneratorSpec::TablePlusTail { head, tail } => {
                if let Some(t) = &tail {
                    let expected = head.len() as i64 + 1;
                    if t.from != expected {
                        return Err(invalid(format!(
                            "tail must start at index {expected} after {} head levels",
                            head.len()
                        )));
                    }
                } else if head.is_empty() {
                    return Err(Error::EmptySpectrum);
                }
                Generator {
                    lower_tail: None,
                    head,
                    head_start: 1,
                    upper_tail: tail,
                }
            }
            GeneratorSpec::TwoSided {
                head,
                negative_tail,
                positive_tail,
            } => {
                let head_start = negative_tail.from + 1;
                if let Some(t) = &positive_tail {
                    let expected = head_start + head.len() as i64;
                    if t.from != expected {
                        return Err(invalid(format!(
                            "positive tail must start at index {expected}"
                        )));
                    }
                }
                Generator {
                    lower_tail: Some(negative_tail),
                    head,
                    head_start,
                    upper_tail: positive_tail,
                }
            }
        };
        generator.validate()?;
        Ok(generator)
    }

    /// Embeds a finite spectrum with indices `1..=n`.
    pub fn from_spectrum(spectrum: &Spectrum<S>) -> Self {
        Generator {
            lower_tail: None,
            head: spectrum.levels().to_vec(),
            head_start: 1,
            upper_tail: None,
        }
    }

    fn validate(&self) -> Result<()> {
        for tail in self.lower_tail.iter().chain(&self.upper_tail) {
            if tail.energy_slope <= S::zero() {
                return Err(invalid("tail energies must increase with the index"));
            }
        }
        // Head levels and both junctions with the tails.
        let head_end = self.head_start + self.head.len() as i64 - 1;
        let lo = self.lower_tail.as_ref().map_or(self.head_start, |t| t.from);
        let hi = self.upper_tail.as_ref().map_or(head_end, |t| t.from);
        let mut prev: Option<Level<S>> = None;
        for n in lo..=hi {
            let level = self.level(n).expect("index inside generator");
            if !level.energy.is_finite_value() || !level.entropy.is_finite_value() {
                return Err(invalid(format!("level {n} is not finite")));
            }
            if let Some(p) = &prev {
                if level.energy <= p.energy {
                    return Err(invalid(format!("energies not increasing at index {n}")));
                }
            }
            prev = Some(level);
        }
        Ok(())
    }

    pub fn is_bounded_below(&self) -> bool {
        self.lower_tail.is_none()
    }

    pub fn is_finite(&self) -> bool {
        self.lower_tail.is_none() && self.upper_tail.is_none()
    }

    /// First index, or `None` when the spectrum is unbounded below.
    pub fn first_index(&self) -> Option<i64> {
        if self.lower_tail.is_some() {
            None
        } else {
            Some(self.head_start)
        }
    }

    /// Last index, or `None` when the spectrum is unbounded above.
    pub fn last_index(&self) -> Option<i64> {
        if self.upper_tail.is_some() {
            None
        } else {
            Some(self.head_start + self.head.len() as i64 - 1)
        }
    }

    pub fn level(&self, n: i64) -> Option<Level<S>> {
        if let Some(t) = &self.lower_tail {
            if n <= t.from {
                return Some(t.level(n));
            }
        }
        if let Some(t) = &self.upper_tail {
            if n >= t.from {
                return Some(t.level(n));
            }
        }
        let offset = n.checked_sub(self.head_start)?;
        usize::try_from(offset)
            .ok()
            .and_then(|i| self.head.get(i))
            .cloned()
    }

    pub fn upper_tail(&self) -> Option<&AffineTail<S>> {
        self.upper_tail.as_ref()
    }

    pub fn lower_tail(&self) -> Option<&AffineTail<S>> {
        self.lower_tail.as_ref()
    }

    /// Finite limiting temperatures `α/γ` of the tails, sorted and deduplicated.
    pub fn thresholds(&self) -> Vec<S> {
        let mut out: Vec<S> = self
            .lower_tail
            .iter()
            .chain(&self.upper_tail)
            .filter_map(AffineTail::threshold)
            .collect();
        out.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
        out.dedup_by(|a, b| a.ties(b));
        out
    }

    /// Exact verdict from the tail slopes alone; `None` exactly at a limiting temperature.
    pub fn analytic_verdict(&self, temperature: &S) -> Option<Verdict> {
        if temperature.is_zero() {
            return None;
        }
        let mut verdict = Verdict::Converged;
        for (tail, upward) in self
            .upper_tail
            .iter()
            .map(|t| (t, true))
            .chain(self.lower_tail.iter().map(|t| (t, false)))
        {
            match tail_behaviour(tail, temperature, upward) {
                TailBehaviour::Diverges => return Some(Verdict::Diverged),
                TailBehaviour::Flat => verdict = Verdict::Inconclusive,
                TailBehaviour::Grows => {}
            }
        }
        (verdict != Verdict::Inconclusive).then_some(verdict)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TailBehaviour {
    /// `F_n/T` increases away from the head.
    Grows,
    /// `F_n/T` constant along the tail: the limiting temperature itself.
    Flat,
    /// `F_n/T` decreases without bound away from the head.
    Diverges,
}

fn tail_behaviour<S: Scalar>(tail: &AffineTail<S>, temperature: &S, upward: bool) -> TailBehaviour {
    let d = tail.reduced_slope(temperature);
    let d = if upward { d } else { -d };
    match d.compare(&S::zero()) {
        Ordering::Greater => TailBehaviour::Grows,
        Ordering::Equal => TailBehaviour::Flat,
        Ordering::Less => TailBehaviour::Diverges,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Converged,
    Diverged,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Converged => "converged",
            Verdict::Diverged => "diverged",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Outcome of probing `min_n F_n/T` on an infinite spectrum.
#[derive(Debug, Clone, PartialEq)]
pub enum EquilibriumStatus<S> {
    Converged {
        free_energy: S,
        index: i64,
    },
    /// Strictly decreasing chain of `(n, F_n/T)` inside a diverging tail.
    Diverged {
        witness: Vec<(i64, S)>,
    },
    Inconclusive {
        horizon: u64,
    },
}

impl<S> EquilibriumStatus<S> {
    pub fn verdict(&self) -> Verdict {
        match self {
            EquilibriumStatus::Converged { .. } => Verdict::Converged,
            EquilibriumStatus::Diverged { .. } => Verdict::Diverged,
            EquilibriumStatus::Inconclusive { .. } => Verdict::Inconclusive,
        }
    }
}

pub const DEFAULT_HORIZON: u64 = 10_000;
const ESCALATIONS: u32 = 3;
const WITNESS_LEN: i64 = 4;
/// Tail indices sampled per tail when re-checking monotonicity.
const TAIL_SAMPLES: i64 = 256;

/// Decides whether the tropical free energy exists at `temperature`.
///
/// The head and the tails up to `|n| ≤ horizon` are evaluated (tails on a
/// sampled stride); the horizon doubles up to three times if it does not
/// reach every tail start. Exactly at a limiting temperature the verdict is
/// inconclusive.
pub fn probe_equilibrium<S: Scalar>(
    generator: &Generator<S>,
    temperature: &S,
    horizon: u64,
) -> Result<EquilibriumStatus<S>> {
    if temperature.is_zero() {
        return Err(Error::ZeroTemperature);
    }
    if horizon < 2 {
        return Err(invalid("horizon must be at least 2"));
    }
    let head_end = generator.head_start + generator.head.len() as i64 - 1;
    let needed = [
        generator.lower_tail.as_ref().map(|t| t.from),
        generator.upper_tail.as_ref().map(|t| t.from),
        (!generator.head.is_empty()).then_some(generator.head_start),
        (!generator.head.is_empty()).then_some(head_end),
    ]
    .into_iter()
    .flatten()
    .map(|n| n.unsigned_abs() + WITNESS_LEN as u64)
    .max()
    .unwrap_or(0);
    let mut h = horizon;
    for _ in 0..ESCALATIONS {
        if h >= needed {
            break;
        }
        h = h.saturating_mul(2);
    }
    if h < needed {
        return Ok(EquilibriumStatus::Inconclusive { horizon: h });
    }
    let h = i64::try_from(h).map_err(|_| invalid("horizon too large"))?;

    let reduced = |n: i64| -> S {
        let level = generator.level(n).expect("index inside generator");
        level.free_energy(temperature) / temperature.clone()
    };

    let mut inconclusive = false;
    let tails = generator
        .upper_tail
        .iter()
        .map(|t| (t, true))
        .chain(generator.lower_tail.iter().map(|t| (t, false)));
    for (tail, upward) in tails {
        let behaviour = tail_behaviour(tail, temperature, upward);
        check_tail_samples(tail, upward, h, behaviour, &reduced)?;
        match behaviour {
            TailBehaviour::Diverges => {
                let step = if upward { 1 } else { -1 };
                let start = if upward {
                    tail.from.max(h - WITNESS_LEN + 1)
                } else {
                    tail.from.min(-h + WITNESS_LEN - 1)
                };
                let witness = (0..WITNESS_LEN)
                    .map(|i| {
                        let n = start + step * i;
                        (n, reduced(n))
                    })
                    .collect();
                return Ok(EquilibriumStatus::Diverged { witness });
            }
            TailBehaviour::Flat => inconclusive = true,
            TailBehaviour::Grows => {}
        }
    }
    if inconclusive {
        return Ok(EquilibriumStatus::Inconclusive { horizon: h as u64 });
    }

    // Every tail grows away from the head, so the minimum sits in the head or at a tail start.
    let candidates = generator
        .lower_tail
        .iter()
        .map(|t| t.from)
        .chain(generator.head_start..=head_end)
        .chain(generator.upper_tail.iter().map(|t| t.from));
    let mut best: Option<(i64, S)> = None;
    for n in candidates {
        let x = reduced(n);
        if best.as_ref().is_none_or(|(_, b)| x < *b) {
            best = Some((n, x));
        }
    }
    let (index, x) = best.expect("generator has at least one level");
    Ok(EquilibriumStatus::Converged {
        free_energy: x * temperature.clone(),
        index,
    })
}

/// Re-evaluates the generator on a stride of tail indices within the horizon
/// and checks that `F_n/T` moves in the direction the tail rule certifies.
fn check_tail_samples<S: Scalar>(
    tail: &AffineTail<S>,
    upward: bool,
    horizon: i64,
    behaviour: TailBehaviour,
    reduced: &impl Fn(i64) -> S,
) -> Result<()> {
    let (lo, hi) = if upward {
        (tail.from, horizon.max(tail.from))
    } else {
        (tail.from.abs(), horizon.max(tail.from.abs()))
    };
    let stride = ((hi - lo) / TAIL_SAMPLES).max(1);
    let mut prev: Option<S> = None;
    let mut m = lo;
    while m <= hi {
        let n = if upward { m } else { -m };
        let x = reduced(n);
        if let Some(p) = &prev {
            let ok = match behaviour {
                TailBehaviour::Grows => x.compare(p) == Ordering::Greater,
                TailBehaviour::Flat => x.compare(p) == Ordering::Equal,
                TailBehaviour::Diverges => x.compare(p) == Ordering::Less,
            };
            if !ok {
                return Err(invalid(format!("tail rule not monotone at index {n}")));
            }
        }
        prev = Some(x);
        m += stride;
    }
    Ok(())
}

/// Limiting temperature of one tail.
#[derive(Debug, Clone, PartialEq)]
pub enum TailLimit<S> {
    /// Equilibrium fails beyond `temperature`; `anchor` is the first tail index
    /// from which the free energies form a monotone chain.
    Limit { temperature: S, anchor: i64 },
    /// No limit from this side.
    Unrestricted,
    /// The sufficient conditions do not hold.
    Inconclusive,
}

fn first_index_with<S: Scalar>(
    tail: &AffineTail<S>,
    upward: bool,
    pred: impl Fn(&Level<S>) -> bool,
) -> i64 {
    // Estimate the root of S_n in f64, then walk to the exact boundary.
    let root = (-tail.entropy_intercept.as_f64() / tail.entropy_slope.as_f64()).floor();
    let step = if upward { 1 } else { -1 };
    let mut n = if root.is_finite() && root.abs() < 1e15 {
        let r = root as i64;
        if upward {
            r.max(tail.from) - 2
        } else {
            r.min(tail.from) + 2
        }
    } else {
        tail.from
    };
    if upward {
        n = n.max(tail.from);
    } else {
        n = n.min(tail.from);
    }
    while !pred(&tail.level(n)) {
        n += step;
    }
    n
}

/// Upper limiting temperature `T_S+` from the upper tail.
///
/// With `S_n` eventually positive and increasing (`γ > 0`) the free energies
/// `F_n = (α − Tγ)n + …` decrease without bound for every `T > α/γ`.
pub fn upper_limiting_temperature<S: Scalar>(generator: &Generator<S>) -> TailLimit<S> {
    let Some(tail) = &generator.upper_tail else {
        return TailLimit::Unrestricted;
    };
    if tail.entropy_slope <= S::zero() {
        return TailLimit::Unrestricted;
    }
    TailLimit::Limit {
        temperature: tail.threshold().expect("nonzero entropy slope"),
        anchor: first_index_with(tail, true, |l| l.entropy > S::zero()),
    }
}

/// Lower limiting temperature `T_S−` of a spectrum unbounded below.
///
/// With `S_n < 0` and `|S_n|` growing toward `n → −∞` (`γ > 0`), the free
/// energies decrease without bound for every `0 < T < α/γ`.
pub fn lower_limiting_temperature<S: Scalar>(generator: &Generator<S>) -> Result<TailLimit<S>> {
    let Some(tail) = &generator.lower_tail else {
        return Err(Error::BoundedBelowSpectrum);
    };
    if tail.entropy_slope <= S::zero() {
        return Ok(TailLimit::Inconclusive);
    }
    Ok(TailLimit::Limit {
        temperature: tail.threshold().expect("nonzero entropy slope"),
        anchor: first_index_with(tail, false, |l| l.entropy < S::zero()),
    })
}

/// Interval of temperatures sharing one verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct VerdictInterval<S> {
    pub lower: Endpoint<S>,
    pub upper: Endpoint<S>,
    pub lower_closed: bool,
    pub upper_closed: bool,
    pub verdict: Verdict,
}

/// Exact partition of `T ≠ 0` into allowed and forbidden open intervals.
pub fn analytic_regions<S: Scalar>(generator: &Generator<S>) -> Vec<VerdictInterval<S>> {
    let mut cuts = generator.thresholds();
    if !cuts.iter().any(|c| c.is_zero()) {
        cuts.push(S::zero());
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    }
    let two = S::one() + S::one();
    let mut bounds: Vec<Endpoint<S>> = vec![Endpoint::NegInfinity];
    bounds.extend(cuts.into_iter().map(Endpoint::Finite));
    bounds.push(Endpoint::PosInfinity);

    let mut out: Vec<VerdictInterval<S>> = Vec::new();
    for pair in bounds.windows(2) {
        let probe = match (&pair[0], &pair[1]) {
            (Endpoint::NegInfinity, Endpoint::Finite(b)) => b.clone() - S::one(),
            (Endpoint::Finite(a), Endpoint::PosInfinity) => a.clone() + S::one(),
            (Endpoint::Finite(a), Endpoint::Finite(b)) => (a.clone() + b.clone()) / two.clone(),
            _ => unreachable!("zero is always a cut"),
        };
        let verdict = generator
            .analytic_verdict(&probe)
            .unwrap_or(Verdict::Inconclusive);
        let crosses_zero = pair[0].finite().is_some_and(|a| a.is_zero());
        match out.last_mut() {
            // Merge across limiting temperatures that do not change the verdict, never across zero.
            Some(last) if last.verdict == verdict && !crosses_zero => last.upper = pair[1].clone(),
            _ => out.push(VerdictInterval {
                lower: pair[0].clone(),
                upper: pair[1].clone(),
                lower_closed: false,
                upper_closed: false,
                verdict,
            }),
        }
    }
    out
}

/// Probes every grid temperature and merges runs of equal verdicts.
///
/// Where a single limiting temperature (or zero) separates two runs it becomes
/// their shared open endpoint; otherwise runs end at their outermost grid points.
pub fn equilibrium_intervals<S: Scalar>(
    generator: &Generator<S>,
    grid: &[S],
    horizon: u64,
) -> Result<Vec<VerdictInterval<S>>> {
    if grid.iter().any(|t| t.is_zero()) {
        return Err(Error::ZeroTemperature);
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(invalid("temperature grid must be strictly increasing"));
    }
    let mut runs: Vec<(S, S, Verdict)> = Vec::new();
    for t in grid {
        let verdict = probe_equilibrium(generator, t, horizon)?.verdict();
        match runs.last_mut() {
            Some(run) if run.2 == verdict => run.1 = t.clone(),
            _ => runs.push((t.clone(), t.clone(), verdict)),
        }
    }
    let mut cuts = generator.thresholds();
    cuts.push(S::zero());

    let mut out: Vec<VerdictInterval<S>> = runs
        .iter()
        .map(|(a, b, v)| VerdictInterval {
            lower: Endpoint::Finite(a.clone()),
            upper: Endpoint::Finite(b.clone()),
            lower_closed: true,
            upper_closed: true,
            verdict: *v,
        })
        .collect();
    for i in 0..runs.len().saturating_sub(1) {
        let (a_last, b_first) = (&runs[i].1, &runs[i + 1].0);
        let between: Vec<&S> = cuts
            .iter()
            .filter(|c| *c >= a_last && *c <= b_first)
            .collect();
        let [cut] = between.as_slice() else { continue };
        let cut = (*cut).clone();
        let singleton_at_cut =
            |run: &(S, S, Verdict)| run.2 == Verdict::Inconclusive && run.0 == cut && run.1 == cut;
        if cut > *a_last && cut < *b_first {
            out[i].upper = Endpoint::Finite(cut.clone());
            out[i].upper_closed = false;
            out[i + 1].lower = Endpoint::Finite(cut);
            out[i + 1].lower_closed = false;
        } else if cut == *b_first && singleton_at_cut(&runs[i + 1]) {
            out[i].upper = Endpoint::Finite(cut);
            out[i].upper_closed = false;
        } else if cut == *a_last && singleton_at_cut(&runs[i]) {
            out[i + 1].lower = Endpoint::Finite(cut);
            out[i + 1].lower_closed = false;
        }
    }
    Ok(out)
}

/// Classical `ln Σ_{|n| ≤ horizon} exp(−F_n/(kT))` over the generator's levels.
pub fn partial_log_partition<S: Scalar>(
    generator: &Generator<S>,
    k: f64,
    temperature: f64,
    horizon: u64,
) -> Result<f64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::NonPositiveK);
    }
    if temperature == 0.0 {
        return Err(Error::ZeroTemperature);
    }
    let h = horizon as i64;
    let lo = generator.first_index().unwrap_or(-h).max(-h);
    let hi = generator.last_index().unwrap_or(h).min(h);
    let xs: Vec<f64> = (lo..=hi)
        .filter_map(|n| generator.level(n))
        .map(|l| -(l.energy.as_f64() - temperature * l.entropy.as_f64()) / (k * temperature))
        .collect();
    Ok(log_sum_exp(&xs))
}

fn affine_from_json<S: Scalar>(value: &Value, location: &str) -> Result<(S, S)> {
    let parts: Vec<Value> = match value {
        Value::Array(items) => items.clone(),
        Value::String(s) => s
            .split(',')
            .map(|p| Value::String(p.trim().into()))
            .collect(),
        _ => Vec::new(),
    };
    if parts.len() != 2 {
        return Err(Error::Parse {
            location: location.to_string(),
            message: "expected affine coefficients [slope, intercept]".into(),
        });
    }
    Ok((
        scalar_from_json(&parts[0], &format!("{location}[0]"))?,
        scalar_from_json(&parts[1], &format!("{location}[1]"))?,
    ))
}

fn tail_from_json<S: Scalar>(value: &Value, location: &str) -> Result<AffineTail<S>> {
    let field = |name: &str| {
        value.get(name).ok_or_else(|| Error::Parse {
            location: format!("{location}.{name}"),
            message: "missing field".into(),
        })
    };
    let (energy_slope, energy_intercept) = affine_from_json(field("E")?, &format!("{location}.E"))?;
    let (entropy_slope, entropy_intercept) =
        affine_from_json(field("S")?, &format!("{location}.S"))?;
    let from = field("from")?.as_i64().ok_or_else(|| Error::Parse {
        location: format!("{location}.from"),
        message: "expected an integer index".into(),
    })?;
    Ok(AffineTail {
        energy_slope,
        energy_intercept,
        entropy_slope,
        entropy_intercept,
        from,
    })
}

impl<S: Scalar> GeneratorSpec<S> {
    pub fn from_json(root: &Value) -> Result<Self> {
        let family = root
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse {
                location: "family".into(),
                message: "missing generator family".into(),
            })?;
        let head = || -> Result<Vec<Level<S>>> {
            root.get("head")
                .map_or(Ok(Vec::new()), |h| levels_from_json(h, "head"))
        };
        let required = |name: &str| {
            root.get(name).ok_or_else(|| Error::Parse {
                location: name.to_string(),
                message: "missing field".into(),
            })
        };
        match family {
            "linear_ratio" => Ok(GeneratorSpec::LinearRatio {
                e0: scalar_from_json(required("e0")?, "e0")?,
                a: scalar_from_json(required("a")?, "a")?,
            }),
            "table_plus_tail" => Ok(GeneratorSpec::TablePlusTail {
                head: head()?,
                tail: root
                    .get("tail")
                    .map(|t| tail_from_json(t, "tail"))
                    .transpose()?,
            }),
            "two_sided" => Ok(GeneratorSpec::TwoSided {
                head: head()?,
                negative_tail: tail_from_json(required("negative_tail")?, "negative_tail")?,
                positive_tail: root
                    .get("positive_tail")
                    .map(|t| tail_from_json(t, "positive_tail"))
                    .transpose()?,
            }),
            other => Err(Error::Parse {
                location: "family".into(),
                message: format!("unknown generator family `{other}`"),
            }),
        }
    }
}

/// Reads a generator description from JSON.
pub fn parse_generator<S: Scalar, R: Read>(mut input: R) -> Result<Generator<S>> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let root: Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    Generator::from_spec(GeneratorSpec::from_json(&root)?)
}
