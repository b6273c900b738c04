//! The (HCr) indecomposability test: a projective character is a PIM when
//! no proper subcharacter restricts to a projective character of every
//! listed Levi subgroup.

use std::collections::{BTreeMap, HashMap};

use dmw_chardata::{load_named, BlockTable, LoadError};
use dmw_decomp::{check_unitriangular, integer_matrix, specialize, ProjectiveVector};
use dmw_paramexpr::Assignment;
use dmw_symbols::{restrict_one_box, ClassicalGroup, SeriesLabel};

/// Default bound on the number of proper subvectors examined.
pub const DEFAULT_HCR_CAP: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HcrError {
    #[error("{needed} subvectors exceed the search cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("restriction is only available for classical groups, not {0}")]
    NotClassical(String),
    #[error("label `{label}`: {message}")]
    Label { label: String, message: String },
    #[error("restriction of `{label}` meets `{image}`, which no block of Levi {levi} contains")]
    UnknownImage { label: String, image: String, levi: String },
    #[error("Levi block `{0}` has unknowns and no witness")]
    UnresolvedLevi(String),
    #[error("Levi block `{0}` is not unitriangular")]
    LeviNotUnitriangular(String),
    #[error("entry {row} of the vector: {message}")]
    Vector { row: usize, message: String },
    #[error(transparent)]
    Load(#[from] LoadError),
}

/// A Levi subgroup with the decomposition tables of its unipotent blocks.
#[derive(Clone, Debug)]
pub struct LeviData {
    pub name: String,
    pub group: ClassicalGroup,
    /// Applied to labels of the ambient group before restriction.
    pub relabel: BTreeMap<String, String>,
    /// Blocks of positive defect, with unknowns fixed at their witnesses.
    pub blocks: Vec<BlockTable>,
    /// Characters forming blocks of defect zero.
    pub defect_zero: Vec<String>,
}

/// Loads the Levi data a table declares, reading Levi blocks by dataset name.
pub fn load_levis(t: &BlockTable) -> Result<Vec<LeviData>, HcrError> {
    t.levis
        .iter()
        .map(|l| {
            let group = ClassicalGroup::parse(&l.group)
                .map_err(|e| HcrError::Label { label: l.group.clone(), message: e.to_string() })?;
            let blocks = l
                .blocks
                .iter()
                .map(|b| {
                    let bt = load_named(b)?;
                    let s = bt.witness.clone().unwrap_or_default();
                    let st = specialize(&bt, &s);
                    if !st.entry_unknowns().is_empty() {
                        return Err(HcrError::UnresolvedLevi(b.clone()));
                    }
                    Ok(st)
                })
                .collect::<Result<Vec<_>, HcrError>>()?;
            Ok(LeviData {
                name: l.name.clone(),
                group,
                relabel: l.relabel.clone(),
                blocks,
                defect_zero: l.defect_zero.clone(),
            })
        })
        .collect()
}

fn remove_box(parts: &[u32]) -> Vec<Vec<u32>> {
    (0..parts.len())
        .filter(|&i| parts[i] > parts.get(i + 1).copied().unwrap_or(0))
        .map(|i| {
            let mut p = parts.to_vec();
            p[i] -= 1;
            if p[i] == 0 {
                p.pop();
            }
            p
        })
        .collect()
}

/// Harish-Chandra restriction of one label to the next Levi down the chain.
fn restrict_label(label: &SeriesLabel) -> Vec<(SeriesLabel, u32)> {
    match label {
        SeriesLabel::Principal(b) => {
            restrict_one_box(b).into_iter().map(|(b, m)| (SeriesLabel::Principal(b), m)).collect()
        }
        SeriesLabel::Cuspidal { prefix, alpha, beta, defect } => {
            let mut out: Vec<(SeriesLabel, u32)> = Vec::new();
            let mk = |a: Vec<u32>, b: Vec<u32>| SeriesLabel::Cuspidal {
                prefix: prefix.clone(),
                alpha: a,
                beta: b,
                defect: *defect,
            };
            out.extend(remove_box(alpha).into_iter().map(|a| (mk(a, beta.clone()), 1)));
            out.extend(remove_box(beta).into_iter().map(|b| (mk(alpha.clone(), b), 1)));
            out
        }
    }
}

enum Place {
    Block(usize, usize),
    DefectZero,
}

/// For each row of the ambient table, the PIM coordinates of its
/// restriction in each Levi block, concatenated over blocks.
fn restriction_coordinates(t: &BlockTable, g: ClassicalGroup, levi: &LeviData) -> Result<Vec<Vec<i64>>, HcrError> {
    let parse = |grp: ClassicalGroup, label: &str| {
        grp.parse_label(label).map_err(|e| HcrError::Label { label: label.to_string(), message: e.to_string() })
    };
    let mut places: HashMap<SeriesLabel, Place> = HashMap::new();
    for (bi, b) in levi.blocks.iter().enumerate() {
        for (ri, r) in b.rows.iter().enumerate() {
            places.insert(parse(levi.group, &r.name)?, Place::Block(bi, ri));
        }
    }
    for name in &levi.defect_zero {
        places.insert(parse(levi.group, name)?, Place::DefectZero);
    }
    let mut matrices = Vec::new();
    for b in &levi.blocks {
        if check_unitriangular(b).is_some() {
            return Err(HcrError::LeviNotUnitriangular(b.name.clone()));
        }
        matrices.push(integer_matrix(b, &Assignment::new()).expect("Levi blocks are specialised"));
    }
    let mut out = Vec::with_capacity(t.len());
    for r in &t.rows {
        let name = levi.relabel.get(&r.name).unwrap_or(&r.name);
        let mut restricted: Vec<Vec<i64>> = levi.blocks.iter().map(|b| vec![0; b.len()]).collect();
        for (image, m) in restrict_label(&parse(g, name)?) {
            match places.get(&image) {
                Some(Place::Block(bi, ri)) => restricted[*bi][*ri] += i64::from(m),
                Some(Place::DefectZero) => {}
                None => {
                    return Err(HcrError::UnknownImage {
                        label: r.name.clone(),
                        image: match &image {
                            SeriesLabel::Principal(b) => b.to_string(),
                            SeriesLabel::Cuspidal { prefix, alpha, beta, .. } => {
                                format!("{prefix}:{alpha:?}.{beta:?}")
                            }
                        },
                        levi: levi.name.clone(),
                    })
                }
            }
        }
        let mut coords = Vec::new();
        for (v, m) in restricted.iter().zip(&matrices) {
            // Forward substitution with the unitriangular Levi matrix.
            let mut x: Vec<i64> = Vec::with_capacity(v.len());
            for i in 0..v.len() {
                let s: i64 = (0..i).map(|j| m[i][j] * x[j]).sum();
                x.push(v[i] - s);
            }
            coords.extend(x);
        }
        out.push(coords);
    }
    Ok(out)
}

/// Whether no proper nonzero subvector `0 ≤ u ≤ v` restricts to a
/// non-negative combination of PIMs in every listed Levi subgroup. `s`
/// fixes any unknowns of `v`.
pub fn hcr_indecomposable(
    t: &BlockTable,
    v: &ProjectiveVector,
    s: &Assignment,
    levis: &[LeviData],
    cap: u64,
) -> Result<bool, HcrError> {
    let g = t.group.classical().ok_or_else(|| HcrError::NotClassical(t.group.name.clone()))?;
    let values: Vec<i64> = v
        .entries
        .iter()
        .enumerate()
        .map(|(i, e)| match e.eval(s) {
            Ok(x) if x >= 0 => Ok(x),
            Ok(x) => Err(HcrError::Vector { row: i + 1, message: format!("negative value {x}") }),
            Err(err) => Err(HcrError::Vector { row: i + 1, message: err.to_string() }),
        })
        .collect::<Result<_, _>>()?;
    let needed = values.iter().map(|&x| x as u128 + 1).product::<u128>().saturating_sub(2);
    if needed > u128::from(cap) {
        return Err(HcrError::CapExceeded { needed, cap });
    }
    let coords: Vec<Vec<Vec<i64>>> =
        levis.iter().map(|l| restriction_coordinates(t, g, l)).collect::<Result<_, _>>()?;
    let support: Vec<usize> = (0..values.len()).filter(|&i| values[i] > 0).collect();
    let mut u = vec![0i64; support.len()];
    let projective_everywhere = |u: &[i64]| {
        coords.iter().all(|c| {
            let width = c.first().map_or(0, Vec::len);
            (0..width).all(|k| support.iter().zip(u).map(|(&i, &ui)| ui * c[i][k]).sum::<i64>() >= 0)
        })
    };
    // Odometer over 0 ≤ u ≤ v restricted to the support of v.
    loop {
        let mut k = 0;
        while k < u.len() && u[k] == values[support[k]] {
            u[k] = 0;
            k += 1;
        }
        if k == u.len() {
            return Ok(true);
        }
        u[k] += 1;
        let full = u.iter().zip(&support).all(|(&ui, &i)| ui == values[i]);
        if !full && projective_everywhere(&u) {
            return Ok(false);
        }
    }
}
