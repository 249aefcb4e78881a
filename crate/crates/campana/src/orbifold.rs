//! Domain types for hyperplane orbifolds on P^n and the quadratic-point
//! orbifold on P^1, plus the projective reduction to the standard
//! arrangement (coordinate hyperplanes, and the sum hyperplane when
//! r = n+1).

use crate::linalg;
use crate::padic::{normalize_primitive, normalize_primitive_rational};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Orbifold multiplicity: an integer m ≥ 2 or ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Multiplicity {
    Finite(u32),
    Infinity,
}

impl Multiplicity {
    pub fn finite(&self) -> Option<u32> {
        match self {
            Multiplicity::Finite(m) => Some(*m),
            Multiplicity::Infinity => None,
        }
    }
}

impl std::fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(m) => s.serialize_u32(*m),
            Multiplicity::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Multiplicity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(m) if m >= 2 => Ok(Multiplicity::Finite(m)),
            Raw::Int(m) => Err(D::Error::custom(format!("multiplicity {m} is below 2"))),
            Raw::Text(t) if t == "inf" => Ok(Multiplicity::Infinity),
            Raw::Text(t) => Err(D::Error::custom(format!("unknown multiplicity {t:?}"))),
        }
    }
}

/// A point of P^n(Q) held as primitive integer coordinates with the first
/// nonzero coordinate positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<BigInt>,
}

impl ProjectivePoint {
    /// Normalizes arbitrary integer coordinates; rejects the zero vector.
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        Ok(ProjectivePoint {
            coords: normalize_primitive(&coords)?,
        })
    }

    pub fn from_i64s(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_rationals(coords: &[BigRational]) -> Result<Self> {
        Ok(ProjectivePoint {
            coords: normalize_primitive_rational(coords)?,
        })
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Ambient dimension n (one less than the coordinate count).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A primitive integer linear form Σ a_i x_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    coeffs: Vec<BigInt>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        Ok(LinearForm {
            coeffs: normalize_primitive(&coeffs)?,
        })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The i-th coordinate form x_i in ambient dimension n.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[i] = BigInt::one();
        LinearForm { coeffs }
    }

    /// The sum form x_0 + … + x_n.
    pub fn sum(n: usize) -> Self {
        LinearForm {
            coeffs: vec![BigInt::one(); n + 1],
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, coords: &[BigInt]) -> BigInt {
        debug_assert_eq!(coords.len(), self.coeffs.len());
        self.coeffs
            .iter()
            .zip(coords)
            .map(|(a, x)| a * x)
            .sum()
    }
}

/// (P^n, Σ (1 − 1/m_i) D_i) with the D_i hyperplanes given by primitive
/// linear forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneOrbifold {
    n: usize,
    forms: Vec<LinearForm>,
    multiplicities: Vec<Multiplicity>,
}

impl HyperplaneOrbifold {
    pub fn new(
        n: usize,
        forms: Vec<LinearForm>,
        multiplicities: Vec<Multiplicity>,
    ) -> Result<Self> {
        if forms.len() != multiplicities.len() {
            return Err(Error::InvalidOrbifold(format!(
                "{} forms but {} multiplicities",
                forms.len(),
                multiplicities.len()
            )));
        }
        if forms.len() > n + 2 {
            return Err(Error::InvalidOrbifold(format!(
                "{} forms exceed r = n+1 on P^{n}",
                forms.len()
            )));
        }
        for f in &forms {
            if f.dim() != n {
                return Err(Error::DimensionMismatch(format!(
                    "form {:?} does not live on P^{n}",
                    f.coeffs()
                )));
            }
        }
        for (i, f) in forms.iter().enumerate() {
            for g in forms.iter().skip(i + 1) {
                if f == g {
                    return Err(Error::InvalidOrbifold(
                        "proportional forms are not allowed".into(),
                    ));
                }
            }
        }
        if let Some(m) = multiplicities.iter().find_map(|m| m.finite().filter(|&v| v < 2)) {
            return Err(Error::InvalidOrbifold(format!("multiplicity {m} is below 2")));
        }
        Ok(HyperplaneOrbifold {
            n,
            forms,
            multiplicities,
        })
    }

    /// The standard arrangement: x_0, …, x_r, plus Σ x_i when r = n+1.
    pub fn standard(n: usize, multiplicities: Vec<Multiplicity>) -> Result<Self> {
        let count = multiplicities.len();
        if count > n + 2 {
            return Err(Error::InvalidOrbifold(format!(
                "{count} components exceed r = n+1 on P^{n}"
            )));
        }
        let forms = (0..count)
            .map(|i| {
                if i <= n {
                    LinearForm::coordinate(n, i)
                } else {
                    LinearForm::sum(n)
                }
            })
            .collect();
        Self::new(n, forms, multiplicities)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn multiplicities(&self) -> &[Multiplicity] {
        &self.multiplicities
    }

    /// Some(r) when the forms are exactly the standard arrangement.
    pub fn standard_r(&self) -> Option<usize> {
        if self.forms.is_empty() {
            return None;
        }
        for (i, f) in self.forms.iter().enumerate() {
            let expect = if i <= self.n {
                LinearForm::coordinate(self.n, i)
            } else if i == self.n + 1 {
                LinearForm::sum(self.n)
            } else {
                return None;
            };
            if *f != expect {
                return None;
            }
        }
        Some(self.forms.len() - 1)
    }

    pub fn all_finite(&self) -> bool {
        self.multiplicities.iter().all(|m| m.finite().is_some())
    }

    pub fn max_finite_multiplicity(&self) -> Option<u32> {
        self.multiplicities.iter().filter_map(|m| m.finite()).max()
    }
}

#[derive(Serialize, Deserialize)]
struct RawOrbifold {
    n: usize,
    forms: Vec<Vec<i64>>,
    multiplicities: Vec<Multiplicity>,
}

impl Serialize for HyperplaneOrbifold {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let forms: std::result::Result<Vec<Vec<i64>>, S::Error> = self
            .forms
            .iter()
            .map(|f| {
                f.coeffs()
                    .iter()
                    .map(|c| {
                        num::ToPrimitive::to_i64(c)
                            .ok_or_else(|| S::Error::custom("coefficient exceeds i64"))
                    })
                    .collect()
            })
            .collect();
        RawOrbifold {
            n: self.n,
            forms: forms?,
            multiplicities: self.multiplicities.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HyperplaneOrbifold {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawOrbifold::deserialize(d)?;
        let forms = raw
            .forms
            .iter()
            .map(|f| LinearForm::from_i64s(f))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        HyperplaneOrbifold::new(raw.n, forms, raw.multiplicities).map_err(D::Error::custom)
    }
}

/// (P^1, (1 − 1/m)·{x_0² − a x_1² = 0}) for a non-square integer a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticOrbifoldP1 {
    a: BigInt,
    m: u32,
}

impl QuadraticOrbifoldP1 {
    pub fn new(a: BigInt, m: u32) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        if is_perfect_square(&a) {
            return Err(Error::SquareParameter(a.to_string()));
        }
        if m < 2 {
            return Err(Error::InvalidOrbifold(format!("multiplicity {m} is below 2")));
        }
        Ok(QuadraticOrbifoldP1 { a, m })
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// x_0² − a·x_1² on a coordinate pair.
    pub fn norm_form(&self, coords: &[BigInt]) -> BigInt {
        debug_assert_eq!(coords.len(), 2);
        &coords[0] * &coords[0] - &self.a * &coords[1] * &coords[1]
    }
}

pub(crate) fn is_perfect_square(a: &BigInt) -> bool {
    if a.is_negative() {
        return false;
    }
    let root = a.magnitude().sqrt();
    &root * &root == *a.magnitude()
}

/// An invertible rational matrix acting as a substitution on forms
/// (f ↦ f ∘ M) and by multiplication on coordinate vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveTransform {
    matrix: Vec<Vec<BigRational>>,
    inverse: Vec<Vec<BigRational>>,
}

impl ProjectiveTransform {
    pub fn new(matrix: Vec<Vec<BigRational>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("transform must be square".into()));
        }
        let inverse = linalg::inverse(&matrix).ok_or(Error::SingularMatrix)?;
        Ok(ProjectiveTransform { matrix, inverse })
    }

    pub fn identity(n: usize) -> Self {
        let id: Vec<Vec<BigRational>> = (0..n + 1)
            .map(|i| {
                (0..n + 1)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        ProjectiveTransform {
            matrix: id.clone(),
            inverse: id,
        }
    }

    pub fn matrix(&self) -> &[Vec<BigRational>] {
        &self.matrix
    }

    pub fn inverse(&self) -> Result<ProjectiveTransform> {
        Ok(ProjectiveTransform {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        })
    }

    /// Matrix-times-point, renormalized to primitive coordinates.
    pub fn apply(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        if p.coords().len() != self.matrix.len() {
            return Err(Error::DimensionMismatch(format!(
                "point in P^{} against a {}×{} transform",
                p.dim(),
                self.matrix.len(),
                self.matrix.len()
            )));
        }
        let image: Vec<BigRational> = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(p.coords())
                    .map(|(a, x)| a * BigRational::from_integer(x.clone()))
                    .sum()
            })
            .collect();
        ProjectivePoint::from_rationals(&image)
    }

    /// Substitute the transform into a form: f ↦ primitive(f ∘ M).
    pub fn transport(&self, f: &LinearForm) -> Result<LinearForm> {
        if f.coeffs().len() != self.matrix.len() {
            return Err(Error::DimensionMismatch("form/transform size".into()));
        }
        let size = self.matrix.len();
        let coeffs: Vec<BigRational> = (0..size)
            .map(|j| {
                (0..size)
                    .map(|i| {
                        BigRational::from_integer(f.coeffs()[i].clone()) * &self.matrix[i][j]
                    })
                    .sum()
            })
            .collect();
        let ints = normalize_primitive_rational(&coeffs)?;
        LinearForm::new(ints)
    }
}

/// True iff every k-subset of the normals has rank k, for k = 2, …, n+1.
pub fn general_position_check(forms: &[LinearForm]) -> Result<bool> {
    if forms.is_empty() {
        return Ok(true);
    }
    let n = forms[0].dim();
    if forms.iter().any(|f| f.dim() != n) {
        return Err(Error::DimensionMismatch(
            "forms live in different ambient dimensions".into(),
        ));
    }
    let rows: Vec<Vec<BigInt>> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
    let max_k = forms.len().min(n + 1);
    for k in 2..=max_k {
        let mut subset = vec![0usize; k];
        if !check_subsets(&rows, &mut subset, 0, 0, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_subsets(
    rows: &[Vec<BigInt>],
    subset: &mut [usize],
    depth: usize,
    start: usize,
    k: usize,
) -> bool {
    if depth == k {
        let picked: Vec<Vec<BigInt>> = subset.iter().map(|&i| rows[i].clone()).collect();
        return linalg::rank(&picked) == k;
    }
    for i in start..rows.len() {
        subset[depth] = i;
        if !check_subsets(rows, subset, depth + 1, i + 1, k) {
            return false;
        }
    }
    true
}

/// Build the substitution transform carrying the orbifold's forms to the
/// standard arrangement: f_i ∘ M ∝ x_i for i ≤ min(r, n), and
/// f_{n+1} ∘ M ∝ Σ x_j when r = n+1.
pub fn to_standard_form(orb: &HyperplaneOrbifold) -> Result<ProjectiveTransform> {
    let n = orb.n();
    let forms = orb.forms();
    if forms.is_empty() {
        return Ok(ProjectiveTransform::identity(n));
    }
    if !general_position_check(forms)? {
        return Err(Error::NotGeneralPosition);
    }
    let r = forms.len() - 1;
    let transform = if r <= n {
        let mut columns: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for j in 0..=r {
            let rows: Vec<Vec<BigInt>> = (0..=r)
                .filter(|&i| i != j)
                .map(|i| forms[i].coeffs().to_vec())
                .collect();
            let kernel = if rows.is_empty() {
                linalg::identity_int(n + 1)
            } else {
                linalg::kernel_saturated(&rows)
            };
            let col = kernel
                .into_iter()
                .find(|v| !forms[j].eval(v).is_zero())
                .ok_or(Error::NotGeneralPosition)?;
            columns.push(col);
        }
        if r < n {
            let rows: Vec<Vec<BigInt>> = forms.iter().map(|f| f.coeffs().to_vec()).collect();
            for col in linalg::kernel_saturated(&rows) {
                columns.push(col);
            }
        }
        if columns.len() != n + 1 {
            return Err(Error::NotGeneralPosition);
        }
        let matrix: Vec<Vec<BigRational>> = (0..n + 1)
            .map(|i| {
                (0..n + 1)
                    .map(|j| BigRational::from_integer(columns[j][i].clone()))
                    .collect()
            })
            .collect();
        ProjectiveTransform::new(matrix)?
    } else {
        // r = n+1: write f_{n+1} = Σ c_j f_j (all c_j nonzero under general
        // position) and take M = F^{-1} · diag(1/c_j).
        let f_mat: Vec<Vec<BigRational>> = (0..n + 1)
            .map(|i| {
                forms[i]
                    .coeffs()
                    .iter()
                    .map(|c| BigRational::from_integer(c.clone()))
                    .collect()
            })
            .collect();
        let f_transpose: Vec<Vec<BigRational>> = (0..n + 1)
            .map(|i| (0..n + 1).map(|j| f_mat[j][i].clone()).collect())
            .collect();
        let ft_inv = linalg::inverse(&f_transpose).ok_or(Error::NotGeneralPosition)?;
        let target: Vec<BigRational> = forms[n + 1]
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let c: Vec<BigRational> = (0..n + 1)
            .map(|i| {
                (0..n + 1)
                    .map(|j| &ft_inv[i][j] * &target[j])
                    .sum::<BigRational>()
            })
            .collect();
        if c.iter().any(|v| v.is_zero()) {
            return Err(Error::NotGeneralPosition);
        }
        let f_inv = linalg::inverse(&f_mat).ok_or(Error::NotGeneralPosition)?;
        let matrix: Vec<Vec<BigRational>> = (0..n + 1)
            .map(|i| (0..n + 1).map(|j| &f_inv[i][j] / &c[j]).collect())
            .collect();
        ProjectiveTransform::new(matrix)?
    };

    // The contract: transported forms proportional to the standard ones.
    for (i, f) in forms.iter().enumerate() {
        let image = transform.transport(f)?;
        let expect = if i <= n {
            LinearForm::coordinate(n, i)
        } else {
            LinearForm::sum(n)
        };
        if image != expect {
            return Err(Error::Verification(format!(
                "transport of form {i} is {:?}, expected the standard form",
                image.coeffs()
            )));
        }
    }
    Ok(transform)
}

/// Matrix-times-point with primitive renormalization.
pub fn apply_transform(t: &ProjectiveTransform, p: &ProjectivePoint) -> Result<ProjectivePoint> {
    t.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::rational::Ratio;

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::from_i64s(c).unwrap()
    }

    #[test]
    fn general_position_examples() {
        let std3 = vec![form(&[1, 0, 0]), form(&[0, 1, 0]), form(&[0, 0, 1])];
        assert!(general_position_check(&std3).unwrap());

        let degenerate = vec![form(&[1, 0, 0]), form(&[0, 1, 0]), form(&[1, 1, 0])];
        assert!(!general_position_check(&degenerate).unwrap());

        let with_sum = vec![
            form(&[1, 0, 0]),
            form(&[0, 1, 0]),
            form(&[0, 0, 1]),
            form(&[1, 1, 1]),
        ];
        assert!(general_position_check(&with_sum).unwrap());
    }

    #[test]
    fn to_standard_two_forms_on_p1() {
        let orb = HyperplaneOrbifold::new(
            1,
            vec![form(&[1, 1]), form(&[1, -1])],
            vec![Multiplicity::Finite(2), Multiplicity::Finite(2)],
        )
        .unwrap();
        let t = to_standard_form(&orb).unwrap();
        assert_eq!(t.transport(&form(&[1, 1])).unwrap(), form(&[1, 0]));
        assert_eq!(t.transport(&form(&[1, -1])).unwrap(), form(&[0, 1]));
    }

    #[test]
    fn to_standard_identity_class() {
        let orb = HyperplaneOrbifold::standard(
            2,
            vec![Multiplicity::Finite(2), Multiplicity::Finite(3)],
        )
        .unwrap();
        let t = to_standard_form(&orb).unwrap();
        for (i, f) in orb.forms().iter().enumerate() {
            assert_eq!(t.transport(f).unwrap(), LinearForm::coordinate(2, i));
        }
    }

    #[test]
    fn to_standard_frame_case() {
        // {x0, x1, x2, 2x0+x1+x2} in P^2: diagonal part (1/2, 1, 1) up to
        // projective scale.
        let orb = HyperplaneOrbifold::new(
            2,
            vec![
                form(&[1, 0, 0]),
                form(&[0, 1, 0]),
                form(&[0, 0, 1]),
                form(&[2, 1, 1]),
            ],
            vec![Multiplicity::Finite(2); 4],
        )
        .unwrap();
        let t = to_standard_form(&orb).unwrap();
        let half = Ratio::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(t.matrix()[0][0], half);
        assert_eq!(t.matrix()[1][1], BigRational::one());
        assert_eq!(t.matrix()[2][2], BigRational::one());
        assert_eq!(
            t.transport(&form(&[2, 1, 1])).unwrap(),
            LinearForm::sum(2)
        );
    }

    #[test]
    fn apply_transform_examples() {
        let id = ProjectiveTransform::identity(2);
        let p = ProjectivePoint::from_i64s(&[1, 2, 3]).unwrap();
        assert_eq!(apply_transform(&id, &p).unwrap(), p);

        let swap = ProjectiveTransform::new(vec![
            vec![BigRational::zero(), BigRational::one()],
            vec![BigRational::one(), BigRational::zero()],
        ])
        .unwrap();
        let p = ProjectivePoint::from_i64s(&[1, 0]).unwrap();
        assert_eq!(
            apply_transform(&swap, &p).unwrap(),
            ProjectivePoint::from_i64s(&[0, 1]).unwrap()
        );

        let half = Ratio::new(BigInt::from(1), BigInt::from(2));
        let diag = ProjectiveTransform::new(vec![
            vec![half, BigRational::zero()],
            vec![BigRational::zero(), BigRational::one()],
        ])
        .unwrap();
        let p = ProjectivePoint::from_i64s(&[2, 3]).unwrap();
        assert_eq!(
            apply_transform(&diag, &p).unwrap(),
            ProjectivePoint::from_i64s(&[1, 3]).unwrap()
        );
    }

    #[test]
    fn orbifold_json_round_trip() {
        let orb = HyperplaneOrbifold::new(
            2,
            vec![form(&[1, 0, 0]), form(&[0, 1, 0]), form(&[1, 1, 1])],
            vec![
                Multiplicity::Finite(2),
                Multiplicity::Finite(3),
                Multiplicity::Infinity,
            ],
        )
        .unwrap();
        let json = serde_json::to_string(&orb).unwrap();
        assert!(json.contains("\"inf\""));
        let back: HyperplaneOrbifold = serde_json::from_str(&json).unwrap();
        assert_eq!(back, orb);

        let parsed: HyperplaneOrbifold = serde_json::from_str(
            r#"{"n":1,"forms":[[1,0],[0,1]],"multiplicities":[2,"inf"]}"#,
        )
        .unwrap();
        assert_eq!(parsed.forms().len(), 2);
    }

    #[test]
    fn quadratic_orbifold_rejects_squares() {
        assert!(QuadraticOrbifoldP1::new(BigInt::from(4), 2).is_err());
        assert!(QuadraticOrbifoldP1::new(BigInt::from(0), 2).is_err());
        assert!(QuadraticOrbifoldP1::new(BigInt::from(-1), 2).is_ok());
        assert!(QuadraticOrbifoldP1::new(BigInt::from(2), 1).is_err());
    }

    #[test]
    fn point_invariants() {
        let p = ProjectivePoint::from_i64s(&[-2, 4, -6]).unwrap();
        assert_eq!(p, ProjectivePoint::from_i64s(&[1, -2, 3]).unwrap());
        assert!(ProjectivePoint::from_i64s(&[0, 0]).is_err());
    }
}
