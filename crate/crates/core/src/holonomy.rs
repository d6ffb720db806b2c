//! Crossing words of relative cycles, the positivity gate, the local lift to
//! the trace space of the cyclic quiver, and its evaluation on moduli.
//!
//! A relative cycle meeting disks `γ_{i₁}, …, γ_{i_k}` with signs `σ_j` is
//! recorded as a crossing word. After free cancellation of adjacent
//! opposite crossings on the same disk, an all-positive word of length `k`
//! lifts to the class `[ρ]` of the full cycle on the cyclic quiver with `k`
//! vertices; the empty word lifts to the loop class on one vertex.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    vars, AlgError, CoordinateRing, Domain, LaurentPoly, Matrix, Scalar, DEFAULT_ENUMERATION_CAP,
};
use crate::quiverhh::{
    ho_trace, rep_moduli_chart, Chain, PathClass, Quiver, QuiverError, Representation,
};

/// Default bound on `spikes · rank²` for symbolic verification.
pub const DEFAULT_SYMBOLIC_CAP: usize = 64;
/// Random chart points checked by [`verify_local_to_global`].
pub const DEFAULT_SAMPLES: usize = 50;

const MAX_DISK: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HolonomyError {
    #[error("crossing {index} (disk {disk}) is negative and survives cancellation")]
    Positivity { index: usize, disk: usize },
    #[error("malformed crossing word: {0}")]
    Syntax(String),
    #[error("disk {disk} is outside 1..={disks}")]
    BadDisk { disk: usize, disks: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("lift is not a power of the full cycle")]
    NotALift,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Alg(#[from] AlgError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub disk: usize,
    pub sign: Sign,
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        write!(f, "{s}{}", self.disk)
    }
}

/// Signed crossings of a relative cycle with the disks `1..=disks`. Both
/// endpoints carry the same trivialization, so no endpoint data is stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CrossingWord {
    disks: usize,
    crossings: Vec<Crossing>,
}

pub type IntersectionVector = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PositivityMode {
    /// Every sign is `+` after free cancellation.
    Geometric,
    /// Every intersection number is nonnegative.
    Homological,
}

impl CrossingWord {
    pub fn new(disks: usize, crossings: Vec<Crossing>) -> Result<Self, HolonomyError> {
        if let Some(c) = crossings.iter().find(|c| c.disk == 0 || c.disk > disks) {
            return Err(HolonomyError::BadDisk { disk: c.disk, disks });
        }
        Ok(CrossingWord { disks, crossings })
    }

    /// Parses `+1,+2,-1`. Without `disks`, the largest index used is taken.
    pub fn parse(text: &str, disks: Option<usize>) -> Result<Self, HolonomyError> {
        let mut crossings = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
            let (sign, rest) = match tok.as_bytes()[0] {
                b'+' => (Sign::Plus, &tok[1..]),
                b'-' => (Sign::Minus, &tok[1..]),
                _ => return Err(HolonomyError::Syntax(format!("`{tok}` needs a sign"))),
            };
            let disk: usize = rest
                .parse()
                .ok()
                .filter(|&d| d <= MAX_DISK)
                .ok_or_else(|| HolonomyError::Syntax(format!("bad disk index in `{tok}`")))?;
            crossings.push(Crossing { disk, sign });
        }
        let d = disks.unwrap_or_else(|| crossings.iter().map(|c| c.disk).max().unwrap_or(0));
        CrossingWord::new(d, crossings)
    }

    pub fn disks(&self) -> usize {
        self.disks
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// The word read from position `k` on.
    pub fn rotate(&self, k: usize) -> CrossingWord {
        let mut crossings = self.crossings.clone();
        if !crossings.is_empty() {
            let len = crossings.len();
            crossings.rotate_left(k % len);
        }
        CrossingWord { disks: self.disks, crossings }
    }

    /// Positions in the original word that survive free cancellation of
    /// adjacent opposite crossings on the same disk.
    pub fn reduced_positions(&self) -> Vec<usize> {
        let mut stack: Vec<usize> = Vec::new();
        for (i, c) in self.crossings.iter().enumerate() {
            match stack.last() {
                Some(&j) if self.crossings[j].disk == c.disk && self.crossings[j].sign != c.sign => {
                    stack.pop();
                }
                _ => stack.push(i),
            }
        }
        stack
    }

    pub fn reduced(&self) -> CrossingWord {
        CrossingWord {
            disks: self.disks,
            crossings: self.reduced_positions().into_iter().map(|i| self.crossings[i]).collect(),
        }
    }
}

impl fmt::Display for CrossingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.crossings.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// `⟨η, γ_i⟩` for each disk: positive minus negative crossings.
pub fn intersection_vector(w: &CrossingWord) -> IntersectionVector {
    let mut v = vec![0i64; w.disks];
    for c in &w.crossings {
        v[c.disk - 1] += c.sign.value();
    }
    v
}

pub fn is_positive(w: &CrossingWord, mode: PositivityMode) -> bool {
    match mode {
        PositivityMode::Homological => intersection_vector(w).iter().all(|&x| x >= 0),
        PositivityMode::Geometric => first_negative(w).is_none(),
    }
}

fn first_negative(w: &CrossingWord) -> Option<usize> {
    w.reduced_positions()
        .into_iter()
        .find(|&i| w.crossings[i].sign == Sign::Minus)
}

/// The local Hochschild class of a positive cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalLift {
    /// Crossings left after cancellation; 0 selects the loop model.
    pub spikes: usize,
    pub quiver: Quiver,
    pub chain: Chain,
}

impl LocalLift {
    pub fn class_display(&self) -> String {
        self.chain.display(&self.quiver)
    }
}

/// `h_η = [ρ]` on the cyclic quiver with one vertex per surviving crossing,
/// or the loop class `[t]` when nothing survives. Rejects words with a
/// surviving negative crossing, reporting its position in the input.
pub fn local_lift(w: &CrossingWord) -> Result<LocalLift, HolonomyError> {
    if let Some(index) = first_negative(w) {
        return Err(HolonomyError::Positivity {
            index,
            disk: w.crossings[index].disk,
        });
    }
    let k = w.reduced_positions().len();
    let quiver = if k == 0 { Quiver::single_loop() } else { Quiver::cyclic(k) };
    let class = PathClass::Cycle((0..k.max(1)).collect());
    Ok(LocalLift {
        spikes: k,
        quiver,
        chain: Chain::single(class),
    })
}

/// Projects a chain on a cyclic or loop quiver to `k[ρ^{±1}]`: a cycle
/// winding `m` times goes to `ρ^m`, an idempotent to its rank-one
/// dimension `1`.
pub fn restrict_to_chart(chain: &Chain, quiver: &Quiver) -> Result<LaurentPoly, HolonomyError> {
    let n = quiver.vertices();
    if n == 0 || (*quiver != Quiver::cyclic(n) && *quiver != Quiver::single_loop()) {
        return Err(HolonomyError::NotALift);
    }
    let v = vars(&["rho"]);
    let mut acc = LaurentPoly::zero(v.clone());
    for (class, c) in chain.terms() {
        let m = match class {
            PathClass::Idempotent(_) => 0,
            PathClass::Cycle(arrows) => arrows.iter().filter(|&&a| a == 0).count() as i32,
        };
        acc = &acc + &LaurentPoly::monomial(v.clone(), vec![m], c.clone());
    }
    Ok(acc)
}

/// A point of the chart `T(L)`: an invertible coordinate per basis cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartPoint {
    coords: Vec<Scalar>,
}

impl ChartPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self, HolonomyError> {
        if let Some(x) = coords.iter().find(|x| x.is_zero()) {
            return Err(HolonomyError::NotInvertible(x.to_string()));
        }
        if let Some(d) = coords.first().map(Scalar::domain) {
            if coords.iter().any(|x| x.domain() != d) {
                return Err(HolonomyError::Alg(AlgError::DomainMismatch));
            }
        }
        Ok(ChartPoint { coords })
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }
}

/// `∏ x_j^{cls_j}`.
pub fn merodromy(point: &ChartPoint, cls: &[i64]) -> Result<Scalar, HolonomyError> {
    if cls.len() != point.coords.len() {
        return Err(HolonomyError::Shape(format!(
            "cycle has {} entries, chart has rank {}",
            cls.len(),
            point.coords.len()
        )));
    }
    let domain = point.coords.first().map_or(Domain::Rational, Scalar::domain);
    let mut acc = Scalar::one(domain);
    for (x, &c) in point.coords.iter().zip(cls) {
        let p = x.pow(c).ok_or_else(|| HolonomyError::NotInvertible(x.to_string()))?;
        acc = &acc * &p;
    }
    Ok(acc)
}

/// A rank-`r` representation of the `n`-spike model: one `r × r` matrix per
/// spike, arrow `j` of the cyclic quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnModuliPoint {
    rank: usize,
    matrices: Vec<Matrix<Scalar>>,
}

impl KnModuliPoint {
    pub fn new(rank: usize, matrices: Vec<Matrix<Scalar>>) -> Result<Self, HolonomyError> {
        if rank == 0 {
            return Err(HolonomyError::Shape("rank must be positive".into()));
        }
        if matrices.iter().any(|m| m.shape() != (rank, rank)) {
            return Err(HolonomyError::Shape(format!("all matrices must be {rank}x{rank}")));
        }
        let domain = matrices.first().map(|m| m.get(0, 0).domain());
        if matrices.iter().flat_map(|m| m.entries()).any(|x| Some(x.domain()) != domain) {
            return Err(HolonomyError::Alg(AlgError::DomainMismatch));
        }
        Ok(KnModuliPoint { rank, matrices })
    }

    /// Rank-one point from scalars.
    pub fn rank_one(values: Vec<Scalar>) -> Result<Self, HolonomyError> {
        let ms = values.into_iter().map(|x| Matrix::new(1, 1, vec![x]).expect("1x1")).collect();
        KnModuliPoint::new(1, ms)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrices(&self) -> &[Matrix<Scalar>] {
        &self.matrices
    }

    fn domain(&self) -> Domain {
        self.matrices.first().map_or(Domain::Rational, |m| m.get(0, 0).domain())
    }

    /// The monodromy `M_n⋯M_1` around the full cycle.
    pub fn monodromy(&self) -> Matrix<Scalar> {
        let d = self.domain();
        let (zero, one) = (Scalar::zero(d), Scalar::one(d));
        self.matrices
            .iter()
            .fold(Matrix::identity(self.rank, &zero, &one), |acc, m| m.mul(&acc, &zero).expect("square"))
    }
}

/// `HO(lift)` at a moduli point: the lift's chain traced against the
/// representation given by the point's matrices.
pub fn ho_on_moduli(lift: &LocalLift, point: &KnModuliPoint) -> Result<Scalar, HolonomyError> {
    let arrows = lift.quiver.arrows().len();
    if point.matrices.len() != arrows {
        return Err(HolonomyError::Shape(format!(
            "lift has {arrows} spikes, point has {} matrices",
            point.matrices.len()
        )));
    }
    let d = point.domain();
    let zero = Scalar::zero(d);
    let mut acc = zero.clone();
    for (class, c) in lift.chain.terms() {
        let coeff = Scalar::Rational(c.clone())
            .to_domain(d)
            .ok_or_else(|| HolonomyError::NotInvertible(c.to_string()))?;
        let value = match class {
            PathClass::Idempotent(_) => Scalar::from_int(point.rank as i64, d),
            PathClass::Cycle(walk) => {
                let mut m = point.matrices[walk[0]].clone();
                for &a in &walk[1..] {
                    m = point.matrices[a].mul(&m, &zero).expect("square");
                }
                m.trace(&zero).expect("square")
            }
        };
        acc = &acc + &(&coeff * &value);
    }
    Ok(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub agree: usize,
    pub total: usize,
}

impl Tally {
    pub fn all_agree(&self) -> bool {
        self.agree == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub spikes: usize,
    pub rank: usize,
    pub q: u64,
    pub seed: u64,
    /// `HO(h_η)` on the generic representation, in the matrix entries.
    pub polynomial: String,
    pub variables: Vec<String>,
    /// No negative exponents and integer coefficients.
    pub globally_regular: bool,
    /// Agreement with the trace of the chart monodromy at random
    /// invertible 𝔽_q-points.
    pub tally: Tally,
}

/// Symbolic `HO` of the lift over the representation space, then a random
/// comparison with the monodromy trace on the invertible chart over 𝔽_q.
pub fn verify_local_to_global(
    lift: &LocalLift,
    rank: usize,
    q: u64,
    seed: u64,
    samples: usize,
    symbolic_cap: usize,
) -> Result<VerifyReport, HolonomyError> {
    crate::exactalg::check_prime(q)?;
    if rank == 0 {
        return Err(HolonomyError::Shape("rank must be positive".into()));
    }
    let quiver = &lift.quiver;
    let dims = vec![rank; quiver.vertices()];
    let rep = Representation::symbolic(quiver, &dims, symbolic_cap).map_err(|e| match e {
        QuiverError::CapExceeded { vars, cap } => {
            HolonomyError::CapExceeded(format!("{vars} symbolic entries exceed the cap {cap}"))
        }
        e => e.into(),
    })?;
    let poly = ho_trace(&lift.chain, &rep)?;
    let globally_regular = poly.is_polynomial() && poly.terms().all(|(_, c)| c.is_integer());
    let chart = rep_moduli_chart(quiver, &dims, symbolic_cap)?;

    let winding = restrict_to_chart(&lift.chain, quiver)?
        .terms()
        .map(|(e, _)| e[0])
        .max()
        .unwrap_or(0);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally { agree: 0, total: 0 };
    let d = Domain::Prime(q);
    let (zero, one) = (Scalar::zero(d), Scalar::one(d));
    for _ in 0..samples {
        let matrices: Vec<Matrix<Scalar>> = (0..quiver.arrows().len())
            .map(|_| random_invertible(&mut rng, rank, q, &zero, &one))
            .collect();
        let coords: Vec<u64> = matrices
            .iter()
            .flat_map(|m| m.entries().iter().map(|x| x.as_fp().expect("prime field").value()))
            .collect();
        debug_assert!(chart.ring.contains_point(&coords, q).unwrap_or(false));
        let symbolic = poly.evaluate_mod(&coords, q)?;
        let point = KnModuliPoint::new(rank, matrices)?;
        let mono = point.monodromy();
        let mut power = Matrix::identity(rank, &zero, &one);
        for _ in 0..winding {
            power = power.mul(&mono, &zero).expect("square");
        }
        let chart_trace = power.trace(&zero).expect("square");
        tally.total += 1;
        if Scalar::Prime(symbolic) == chart_trace {
            tally.agree += 1;
        }
    }
    Ok(VerifyReport {
        spikes: lift.spikes,
        rank,
        q,
        seed,
        polynomial: poly.to_string(),
        variables: rep.vars().to_vec(),
        globally_regular,
        tally,
    })
}

fn random_invertible(rng: &mut ChaCha8Rng, r: usize, q: u64, zero: &Scalar, one: &Scalar) -> Matrix<Scalar> {
    loop {
        let m = Matrix::from_fn(r, r, |_, _| Scalar::from_int(rng.gen_range(0..q) as i64, Domain::Prime(q)));
        if !m.det(zero, one).expect("square").is_zero() {
            return m;
        }
    }
}

/// A point of the Hopf-link moduli `Spec ℤ[x,y]_{(1+xy)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfPoint {
    pub x: Scalar,
    pub y: Scalar,
}

impl HopfPoint {
    pub fn new(x: Scalar, y: Scalar) -> Result<Self, HolonomyError> {
        if x.domain() != y.domain() {
            return Err(HolonomyError::Alg(AlgError::DomainMismatch));
        }
        let u = &Scalar::one(x.domain()) + &(&x * &y);
        if u.is_zero() {
            return Err(HolonomyError::NotInvertible(format!("1 + xy at ({x}, {y})")));
        }
        Ok(HopfPoint { x, y })
    }
}

/// The frame action `(t₁, t₂; x, y) ↦ (t₁ x t₂⁻¹, t₂ y t₁⁻¹)`.
pub fn hopf_action(t1: &Scalar, t2: &Scalar, p: &HopfPoint) -> Result<HopfPoint, HolonomyError> {
    let d = p.x.domain();
    if t1.domain() != d || t2.domain() != d {
        return Err(HolonomyError::Alg(AlgError::DomainMismatch));
    }
    let i1 = t1.inv().ok_or_else(|| HolonomyError::NotInvertible(t1.to_string()))?;
    let i2 = t2.inv().ok_or_else(|| HolonomyError::NotInvertible(t2.to_string()))?;
    HopfPoint::new(&(t1 * &p.x) * &i2, &(t2 * &p.y) * &i1)
}

/// The action on coordinate functions over `ℚ[t₁^{±1}, t₂^{±1}, x, y]`.
pub fn hopf_action_symbolic() -> (LaurentPoly, LaurentPoly) {
    let v = vars(&["t1", "t2", "x", "y"]);
    let p = |s: &str| crate::exactalg::parse_poly(s, &v).expect("literal");
    (p("t1*x*t2^-1"), p("t2*y*t1^-1"))
}

/// Checks, as exact identities, that the action fixes `1 + xy` and that the
/// diagonal `t₁ = t₂` acts trivially.
pub fn hopf_symbolic_identities() -> (bool, bool) {
    let (x1, y1) = hopf_action_symbolic();
    let v = x1.vars().clone();
    let p = |s: &str| crate::exactalg::parse_poly(s, &v).expect("literal");
    let one = LaurentPoly::one(v.clone());
    let preserves = &one + &(&x1 * &y1) == p("1 + x*y");
    // restrict to the diagonal by renaming t2 to t1
    let diag = |f: &LaurentPoly| {
        LaurentPoly::from_terms(
            v.clone(),
            f.terms().map(|(e, c)| (vec![e[0] + e[1], 0, e[2], e[3]], c.clone())),
        )
    };
    let trivial = diag(&x1) == p("x") && diag(&y1) == p("y");
    (preserves, trivial)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrbitType {
    pub orbits: usize,
    /// Distinct orbit sizes seen.
    pub sizes: Vec<usize>,
}

impl OrbitType {
    fn add(&mut self, size: usize) {
        self.orbits += 1;
        if let Err(i) = self.sizes.binary_search(&size) {
            self.sizes.insert(i, size);
        }
    }
}

/// Orbits of `𝔽_q^×` acting on `X(𝔽_q)` by `τ·(x, y) = (τx, τ⁻¹y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfCensus {
    pub q: u64,
    /// `xy = α` with `α ∉ {0, −1}`.
    pub free_orbits_alpha: OrbitType,
    /// `x ≠ 0 = y`.
    pub orbit_x: OrbitType,
    /// `x = 0 ≠ y`.
    pub orbit_y: OrbitType,
    pub fixed_point: OrbitType,
    /// Number of points, summed over all orbits.
    pub total: u64,
}

impl HopfCensus {
    /// The expected shape: `q−2` free orbits of size `q−1`, single orbits
    /// `O_x`, `O_y` of size `q−1`, one fixed point, `q²−q+1` points.
    pub fn matches_expected(&self) -> bool {
        let q = self.q as usize;
        let sized = |o: &OrbitType, n: usize, s: usize| o.orbits == n && (n == 0 || o.sizes == vec![s]);
        sized(&self.free_orbits_alpha, q - 2, q - 1)
            && sized(&self.orbit_x, 1, q - 1)
            && sized(&self.orbit_y, 1, q - 1)
            && sized(&self.fixed_point, 1, 1)
            && self.total == self.q * self.q - self.q + 1
    }
}

pub fn hopf_orbit_census(q: u64, cap: u64) -> Result<HopfCensus, HolonomyError> {
    let points = CoordinateRing::hopf().enumerate_points(q, cap)?;
    let mut seen: BTreeMap<(u64, u64), bool> = points.iter().map(|p| ((p[0], p[1]), false)).collect();
    let mut census = HopfCensus {
        q,
        free_orbits_alpha: OrbitType::default(),
        orbit_x: OrbitType::default(),
        orbit_y: OrbitType::default(),
        fixed_point: OrbitType::default(),
        total: 0,
    };
    let inv = |t: u64| crate::exactalg::Fp::from_u64(t, q).inv().expect("nonzero").value();
    for p in &points {
        let (x, y) = (p[0], p[1]);
        if seen[&(x, y)] {
            continue;
        }
        let mut size = 0;
        for tau in 1..q {
            let image = (tau * x % q, inv(tau) * y % q);
            let flag = seen.get_mut(&image).expect("action preserves X");
            if !*flag {
                *flag = true;
                size += 1;
            }
        }
        census.total += size as u64;
        match (x != 0, y != 0) {
            (true, true) => census.free_orbits_alpha.add(size),
            (true, false) => census.orbit_x.add(size),
            (false, true) => census.orbit_y.add(size),
            (false, false) => census.fixed_point.add(size),
        }
    }
    Ok(census)
}

/// Census with the default enumeration cap.
pub fn hopf_census(q: u64) -> Result<HopfCensus, HolonomyError> {
    hopf_orbit_census(q, DEFAULT_ENUMERATION_CAP)
}
