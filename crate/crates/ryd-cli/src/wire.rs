//! JSON wire format.
//!
//! Class descriptors are discriminated by their field shape rather than an
//! explicit tag: a flag class carries `n` and a `k` list, an isotropic
//! class carries `family`/`base`/`top`, and a classical index carries
//! `gamma`.  Parsing validates through the owning module, so every value
//! that survives deserialization describes a real class.  Output uses one
//! canonical presentation per kind, and expansions are sorted
//! lexicographically on the serialized class key, making identical
//! invocations byte-identical.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use ryd_core::perm::{word_to_perm, GrassPerm, SignedFamily};
use ryd_core::poset::{FlagShape, LieFamily};
use ryd_core::ryd::{perm_from_ryd, ryd_from_perm, Charge, FlagRYD, IsotropicRYD};
use ryd_core::star::{is_adjoint_class, is_coadjoint_class, AdjointClass, CoadjointClass};

use crate::error::{CliError, Result};

// ---------------------------------------------------------------------------
// Shared name enums.

/// Orthogonal family on the wire: `"B"` is `OG(k, 2n+1)`, `"D"` is
/// `OG(k, 2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyName {
    B,
    D,
}

impl From<FamilyName> for LieFamily {
    fn from(f: FamilyName) -> LieFamily {
        match f {
            FamilyName::B => LieFamily::B,
            FamilyName::D => LieFamily::D,
        }
    }
}

impl From<FamilyName> for SignedFamily {
    fn from(f: FamilyName) -> SignedFamily {
        match f {
            FamilyName::B => SignedFamily::B,
            FamilyName::D => SignedFamily::D,
        }
    }
}

/// Charge marker on the wire: `"up"` or `"down"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChargeName {
    Up,
    Down,
}

impl From<ChargeName> for Charge {
    fn from(c: ChargeName) -> Charge {
        match c {
            ChargeName::Up => Charge::Up,
            ChargeName::Down => Charge::Down,
        }
    }
}

impl From<Charge> for ChargeName {
    fn from(c: Charge) -> ChargeName {
        match c {
            Charge::Up => ChargeName::Up,
            Charge::Down => ChargeName::Down,
        }
    }
}

/// One of the two two-row spaces: the coadjoint Lagrangian `LG(2,2n)` or
/// the adjoint even orthogonal `OG(2,2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpaceName {
    LG,
    OG,
}

// ---------------------------------------------------------------------------
// Flag classes.

/// One region of a flag diagram: the block `(i, j)` and its partition.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionPart {
    pub region: (usize, usize),
    pub partition: Vec<u32>,
}

/// A Schubert class on a partial flag variety, in one of three equivalent
/// presentations: one-line permutation, word letters, or per-region
/// partitions.  Exactly one presentation must be given; output always uses
/// the one-line form.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagClass {
    pub n: usize,
    pub k: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regions: Option<Vec<RegionPart>>,
}

impl FlagClass {
    pub fn shape(&self) -> Result<FlagShape> {
        Ok(FlagShape::new(self.n, &self.k)?)
    }

    /// Validate and build the diagram.
    pub fn to_ryd(&self) -> Result<FlagRYD> {
        let shape = self.shape()?;
        let presentations = [
            self.perm.is_some(),
            self.word.is_some(),
            self.regions.is_some(),
        ];
        if presentations.iter().filter(|&&p| p).count() != 1 {
            return Err(CliError::Input(
                "a flag class needs exactly one of `perm`, `word`, `regions`".into(),
            ));
        }
        if let Some(perm) = &self.perm {
            Ok(ryd_from_perm(&GrassPerm::new(perm, &shape)?))
        } else if let Some(word) = &self.word {
            Ok(ryd_from_perm(&word_to_perm(word, &shape)?))
        } else {
            let parts: Vec<((usize, usize), Vec<u32>)> = self
                .regions
                .as_ref()
                .unwrap()
                .iter()
                .map(|r| (r.region, r.partition.clone()))
                .collect();
            Ok(FlagRYD::new(&shape, &parts)?)
        }
    }

    /// The canonical (one-line) presentation of a permutation.
    pub fn of_perm(w: &GrassPerm) -> FlagClass {
        FlagClass {
            n: w.n(),
            k: w.shape().k().to_vec(),
            perm: Some(w.one_line().to_vec()),
            word: None,
            regions: None,
        }
    }

    /// The canonical presentation of a diagram.
    pub fn of_ryd(ryd: &FlagRYD) -> Result<FlagClass> {
        Ok(FlagClass::of_perm(&perm_from_ryd(ryd)?))
    }
}

// ---------------------------------------------------------------------------
// Isotropic classes and classical indices.

/// A Schubert class on a non-maximal isotropic Grassmannian, presented as
/// its diagram: `k` base rows, the top staircase, and (even family only)
/// the charge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsotropicClass {
    pub family: FamilyName,
    pub n: usize,
    pub k: usize,
    pub base: Vec<u32>,
    pub top: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charge: Option<ChargeName>,
}

impl IsotropicClass {
    pub fn to_ryd(&self) -> Result<IsotropicRYD> {
        Ok(IsotropicRYD::new(
            self.family.into(),
            self.n,
            self.k,
            &self.base,
            &self.top,
            self.charge.map(Into::into),
        )?)
    }

    pub fn of_ryd(ryd: &IsotropicRYD) -> IsotropicClass {
        IsotropicClass {
            family: match ryd.family {
                LieFamily::B => FamilyName::B,
                LieFamily::D => FamilyName::D,
            },
            n: ryd.n,
            k: ryd.k,
            base: ryd.base.clone(),
            top: ryd.top.clone(),
            charge: ryd.charge.map(Into::into),
        }
    }
}

fn marker_is_zero(m: &u8) -> bool {
    *m == 0
}

/// The classical index of an isotropic Schubert class: an `(n−k)`-strict
/// partition plus the even-family type marker, omitted when it is 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BktIndex {
    pub gamma: Vec<u32>,
    #[serde(rename = "type", default, skip_serializing_if = "marker_is_zero")]
    pub marker: u8,
}

/// A classical index together with the space it indexes, for the inverse
/// translation direction.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextedIndex {
    pub family: FamilyName,
    pub n: usize,
    pub k: usize,
    pub gamma: Vec<u32>,
    #[serde(rename = "type", default, skip_serializing_if = "marker_is_zero")]
    pub marker: u8,
}

// ---------------------------------------------------------------------------
// Two-row diagram classes (coadjoint LG / adjoint OG).

/// A diagram class on one of the two-row spaces: base rows `(λ₁, λ₂)`,
/// the single top root, and (even orthogonal only) the charge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoRowClass {
    pub base: Vec<u32>,
    pub top: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub charge: Option<ChargeName>,
}

impl TwoRowClass {
    fn base_pair(&self) -> Result<(u32, u32)> {
        match self.base.as_slice() {
            [] => Ok((0, 0)),
            &[a] => Ok((a, 0)),
            &[a, b] => Ok((a, b)),
            _ => Err(CliError::Input(format!(
                "a two-row class has at most 2 base rows, got {:?}",
                self.base
            ))),
        }
    }

    pub fn to_coadjoint(&self, n: u32) -> Result<CoadjointClass> {
        if self.charge.is_some() {
            return Err(CliError::Input("Lagrangian classes carry no charge".into()));
        }
        let class = CoadjointClass {
            base: self.base_pair()?,
            top_used: self.top,
        };
        if !is_coadjoint_class(n, class) {
            return Err(CliError::Input(format!(
                "{:?} with top={} is not a coadjoint diagram class for LG(2,{})",
                self.base,
                self.top,
                2 * n
            )));
        }
        Ok(class)
    }

    pub fn to_adjoint(&self, n: u32) -> Result<AdjointClass> {
        let class = AdjointClass {
            base: self.base_pair()?,
            top_used: self.top,
            charge: self.charge.map(Into::into),
        };
        if !is_adjoint_class(n, class) {
            return Err(CliError::Input(format!(
                "{:?} with top={} charge={:?} is not an adjoint diagram class for OG(2,{})",
                self.base,
                self.top,
                self.charge,
                2 * n
            )));
        }
        Ok(class)
    }

    pub fn of_coadjoint(class: CoadjointClass) -> TwoRowClass {
        TwoRowClass {
            base: vec![class.base.0, class.base.1],
            top: class.top_used,
            charge: None,
        }
    }

    pub fn of_adjoint(class: AdjointClass) -> TwoRowClass {
        TwoRowClass {
            base: vec![class.base.0, class.base.1],
            top: class.top_used,
            charge: class.charge.map(Into::into),
        }
    }
}

// ---------------------------------------------------------------------------
// Requests.

/// Input to `bk` and `cup`: an ordered pair of flag classes on one shape.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairRequest {
    pub left: FlagClass,
    pub right: FlagClass,
}

/// Input to `lr`: the coefficient of `target` in `left · right`, computed
/// inside an explicit `rows × cols` box.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LrRequest {
    pub left: Vec<u32>,
    pub right: Vec<u32>,
    pub target: Vec<u32>,
    pub rows: usize,
    pub cols: usize,
}

/// Input to `pieri`: a space, a degree, and a typed index.  `primed`
/// selects the second Pieri class of the even orthogonal fork degree.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieriRequest {
    pub space: SpaceName,
    pub n: u32,
    pub p: u32,
    #[serde(default)]
    pub primed: bool,
    pub gamma: Vec<u32>,
    #[serde(rename = "type", default)]
    pub marker: u8,
}

/// Input to `star`: a space and an ordered pair of two-row diagram classes.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StarRequest {
    pub space: SpaceName,
    pub n: u32,
    pub left: TwoRowClass,
    pub right: TwoRowClass,
}

/// Input to `render` for a two-row diagram class.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoRowRender {
    pub space: SpaceName,
    pub n: u32,
    pub base: Vec<u32>,
    pub top: bool,
    #[serde(default)]
    pub charge: Option<ChargeName>,
}

// ---------------------------------------------------------------------------
// Expansions.

/// One term of an expansion: an integer coefficient and the class it
/// multiplies.
#[derive(Debug, Serialize)]
pub struct Term<C> {
    pub coeff: u64,
    pub class: C,
}

/// Sort terms lexicographically on the serialized class key — the
/// canonical expansion order of every subcommand.
pub fn sort_terms<C: Serialize>(terms: Vec<Term<C>>) -> Result<Vec<Term<C>>> {
    let mut keyed: Vec<(String, Term<C>)> = terms
        .into_iter()
        .map(|t| Ok((serde_json::to_string(&t.class)?, t)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, t)| t).collect())
}

/// Sort bare classes lexicographically on their serialized key.
pub fn sort_classes<C: Serialize>(classes: Vec<C>) -> Result<Vec<C>> {
    let mut keyed: Vec<(String, C)> = classes
        .into_iter()
        .map(|c| Ok((serde_json::to_string(&c)?, c)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

/// Serialize a result document on a single line, newline-terminated.
pub fn to_output<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

// ---------------------------------------------------------------------------
// Field-shape dispatch for commands that accept several descriptor kinds.

pub fn parse_json(input: &str) -> Result<Value> {
    Ok(serde_json::from_str(input)?)
}

pub fn has_key(v: &Value, key: &str) -> bool {
    v.as_object().is_some_and(|o| o.contains_key(key))
}

/// Deserialize a `Value` into a concrete request type with input-error
/// classification.
pub fn from_value<T: serde::de::DeserializeOwned>(v: Value) -> Result<T> {
    Ok(serde_json::from_value(v)?)
}

/// Strip trailing zero parts: the canonical form of a classical index.
pub fn trim_zeros(parts: &[u32]) -> Vec<u32> {
    let mut out = parts.to_vec();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flag_class_needs_exactly_one_presentation() {
        let none = FlagClass {
            n: 4,
            k: vec![2],
            perm: None,
            word: None,
            regions: None,
        };
        assert!(none.to_ryd().is_err());
        let both = FlagClass {
            perm: Some(vec![1, 2, 3, 4]),
            word: Some(vec![]),
            ..none.clone()
        };
        assert!(both.to_ryd().is_err());
    }

    #[test]
    fn flag_class_round_trips_through_every_presentation() {
        let shape = FlagShape::new(5, &[2, 4]).unwrap();
        let w = GrassPerm::new(&[3, 4, 1, 2, 5], &shape).unwrap();
        let canonical = FlagClass::of_perm(&w);
        let ryd = canonical.to_ryd().unwrap();
        let via_word = FlagClass {
            perm: None,
            word: Some(ryd_core::perm::word_of(&w)),
            ..canonical.clone()
        };
        assert_eq!(via_word.to_ryd().unwrap(), ryd);
        let via_regions = FlagClass {
            perm: None,
            regions: Some(
                ryd.parts_with_regions()
                    .into_iter()
                    .map(|(region, partition)| RegionPart { region, partition })
                    .collect(),
            ),
            ..canonical.clone()
        };
        assert_eq!(via_regions.to_ryd().unwrap(), ryd);
        assert_eq!(FlagClass::of_ryd(&ryd).unwrap().perm, canonical.perm);
    }

    #[test]
    fn bkt_index_omits_zero_marker() {
        let idx = BktIndex {
            gamma: vec![6, 1, 1],
            marker: 0,
        };
        assert_eq!(serde_json::to_string(&idx).unwrap(), r#"{"gamma":[6,1,1]}"#);
        let marked = BktIndex {
            gamma: vec![3, 2],
            marker: 2,
        };
        assert_eq!(
            serde_json::to_string(&marked).unwrap(),
            r#"{"gamma":[3,2],"type":2}"#
        );
        let parsed: BktIndex = serde_json::from_str(r#"{"gamma":[6,1,1]}"#).unwrap();
        assert_eq!(parsed.marker, 0);
    }

    #[test]
    fn term_serializes_coeff_then_class() {
        let term = Term {
            coeff: 2,
            class: BktIndex {
                gamma: vec![1],
                marker: 0,
            },
        };
        assert_eq!(
            serde_json::to_string(&term).unwrap(),
            r#"{"coeff":2,"class":{"gamma":[1]}}"#
        );
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let bad: std::result::Result<BktIndex, _> =
            serde_json::from_str(r#"{"gamma":[1],"typ":1}"#);
        assert!(bad.is_err());
    }
}
