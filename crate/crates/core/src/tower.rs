//! Polyadic Cayley-Dickson towers: arity chains, dimensions and the nested
//! block-shift shape.
//!
//! Stage 0 is the innermost cycle; the last stage is the outermost block level.

use crate::error::{Error, Result};
use crate::hypercomplex::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerSpec {
    stages: Vec<usize>,
    kappas: Option<Vec<usize>>,
}

impl TowerSpec {
    pub fn new(stages: Vec<usize>) -> Result<Self> {
        if stages.is_empty() {
            return Err(Error::Malformed("a tower needs at least one stage".into()));
        }
        if let Some(&n) = stages.iter().find(|&&n| n < 3) {
            return Err(Error::InvalidArity(n));
        }
        Ok(TowerSpec { stages, kappas: None })
    }

    /// A spec whose stages are linked by the given polyadic powers,
    /// `n_{i+1} = kappa_i (n_i - 1) + 1`.
    pub fn with_kappas(stages: Vec<usize>, kappas: Vec<usize>) -> Result<Self> {
        let mut spec = Self::new(stages)?;
        if kappas.len() + 1 != spec.stages.len() {
            return Err(Error::DimMismatch { expected: spec.stages.len() - 1, found: kappas.len() });
        }
        for (i, (w, &k)) in spec.stages.windows(2).zip(&kappas).enumerate() {
            if k == 0 || w[1] != k * (w[0] - 1) + 1 {
                return Err(Error::ChainBroken { stage: i });
            }
        }
        spec.kappas = Some(kappas);
        Ok(spec)
    }

    pub fn stages(&self) -> &[usize] {
        &self.stages
    }

    pub fn kappas(&self) -> Option<&[usize]> {
        self.kappas.as_deref()
    }

    /// Number of doublings `ℓ`.
    pub fn level(&self) -> u32 {
        self.stages.len() as u32 - 1
    }

    pub fn size(&self) -> usize {
        self.stages.iter().map(|n| n - 1).product()
    }
}

pub fn tower_dimension(spec: &TowerSpec) -> usize {
    (1usize << spec.level()) * spec.size()
}

/// Integral ratios `(n_{i+1} - 1) / (n_i - 1)`, or the first broken link.
pub fn validate_arity_chain(spec: &TowerSpec) -> Result<Vec<usize>> {
    spec.stages
        .windows(2)
        .enumerate()
        .map(|(i, w)| {
            let (lo, hi) = (w[0] - 1, w[1] - 1);
            if hi % lo == 0 {
                Ok(hi / lo)
            } else {
                Err(Error::ChainBroken { stage: i })
            }
        })
        .collect()
}

/// Indices `i` whose link fails [`validate_arity_chain`].
pub fn chain_warnings(spec: &TowerSpec) -> Vec<usize> {
    spec.stages.windows(2).enumerate().filter(|(_, w)| (w[1] - 1) % (w[0] - 1) != 0).map(|(i, _)| i).collect()
}

/// Monomial pattern of a tower matrix, stored as a column permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerShape {
    cols: Vec<usize>,
    block_sizes: Vec<usize>,
    coeff_dim: usize,
}

impl TowerShape {
    pub fn size(&self) -> usize {
        self.cols.len()
    }

    pub fn coeff_dim(&self) -> usize {
        self.coeff_dim
    }

    /// Side lengths of the nested blocks, innermost first; the last is the size.
    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// 1-based column of the nonzero cell in each 0-based row.
    pub fn column_of(&self, row: usize) -> usize {
        self.cols[row] + 1
    }

    /// Nonzero cells as 1-based `(row, col)`, sorted by row.
    pub fn pattern(&self) -> Vec<(usize, usize)> {
        self.cols.iter().enumerate().map(|(r, &c)| (r + 1, c + 1)).collect()
    }

    pub fn is_monomial(&self) -> bool {
        let mut seen = vec![false; self.cols.len()];
        self.cols.iter().all(|&c| c < seen.len() && !std::mem::replace(&mut seen[c], true))
    }

    /// Places this shape into every star of a `cycle`-cycle, one level up.
    pub fn embed(&self, cycle: usize) -> TowerShape {
        let s = self.size();
        let cols = (0..cycle).flat_map(|outer| self.cols.iter().map(move |&c| ((outer + 1) % cycle) * s + c)).collect();
        let mut block_sizes = self.block_sizes.clone();
        block_sizes.push(s * cycle);
        TowerShape { cols, block_sizes, coeff_dim: self.coeff_dim * 2 }
    }
}

fn cycle_shape(m: usize) -> TowerShape {
    TowerShape { cols: (0..m).map(|r| (r + 1) % m).collect(), block_sizes: vec![m], coeff_dim: 1 }
}

pub fn build_shape(spec: &TowerSpec) -> TowerShape {
    let (first, rest) = spec.stages.split_first().expect("nonempty spec");
    rest.iter().fold(cycle_shape(first - 1), |shape, n| shape.embed(n - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinalArity {
    /// Arity of the outermost stage.
    pub outer: usize,
    /// Arity of the whole matrix read as one cyclic shift, `M + 1`.
    pub flat: usize,
}

pub fn final_arity(spec: &TowerSpec) -> FinalArity {
    FinalArity { outer: *spec.stages.last().expect("nonempty spec"), flat: spec.size() + 1 }
}

/// Text art: `★` for a nonzero cell, `·` for zero, `|` runs between blocks
/// (one bar per enclosing level boundary).
pub fn render_shape(shape: &TowerShape) -> String {
    let m = shape.size();
    let inner = &shape.block_sizes[..shape.block_sizes.len() - 1];
    let mut out = String::new();
    for r in 0..m {
        for c in 0..m {
            if c > 0 {
                let depth = inner.iter().filter(|&&s| c % s == 0).count();
                if depth > 0 {
                    out.push(' ');
                    out.push_str(&"|".repeat(depth));
                    out.push(' ');
                }
            }
            out.push(if shape.cols[r] == c { '★' } else { '·' });
        }
        out.push('\n');
    }
    out
}

/// Membership in the division subset: every cell invertible.
pub fn cells_invertible<A: Coefficient>(cells: &[A]) -> bool {
    cells.iter().all(|c| c.try_inverse().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(v: &[usize]) -> TowerSpec {
        TowerSpec::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(tower_dimension(&spec(&[5, 3, 4])), 96);
        assert_eq!(tower_dimension(&spec(&[6])), 5);
        assert_eq!(tower_dimension(&spec(&[3, 3])), 8);
    }

    #[test]
    fn chains() {
        assert_eq!(validate_arity_chain(&spec(&[5, 3, 4])), Err(Error::ChainBroken { stage: 0 }));
        assert_eq!(validate_arity_chain(&spec(&[3, 5])), Ok(vec![2]));
        assert_eq!(validate_arity_chain(&spec(&[4, 4])), Ok(vec![1]));
        assert_eq!(chain_warnings(&spec(&[5, 3, 4])), vec![0, 1]);
        assert!(TowerSpec::with_kappas(vec![3, 5, 9], vec![2, 2]).is_ok());
        assert_eq!(TowerSpec::with_kappas(vec![3, 5, 8], vec![2, 2]), Err(Error::ChainBroken { stage: 1 }));
        assert_eq!(TowerSpec::new(vec![5, 2]), Err(Error::InvalidArity(2)));
    }

    #[test]
    fn single_stage_shapes() {
        assert_eq!(build_shape(&spec(&[4])).pattern(), vec![(1, 2), (2, 3), (3, 1)]);
        assert_eq!(render_shape(&build_shape(&spec(&[3]))), "·★\n★·\n");
    }

    #[test]
    fn figure_landmarks() {
        let s = build_shape(&spec(&[5, 3, 4]));
        assert_eq!(s.size(), 24);
        assert_eq!(s.coeff_dim(), 4);
        assert_eq!((s.column_of(0), s.column_of(7), s.column_of(23)), (14, 9, 1));
        assert!(s.is_monomial());
    }

    #[test]
    fn rendering_has_one_star_per_line() {
        let text = render_shape(&build_shape(&spec(&[5, 3, 4])));
        assert_eq!(text.lines().count(), 24);
        assert!(text.lines().all(|l| l.matches('★').count() == 1));
        assert!(text.lines().next().unwrap().starts_with("···· | ···· || ···· | ·★"));
    }

    #[test]
    fn final_arities() {
        assert_eq!(final_arity(&spec(&[5, 3, 4])), FinalArity { outer: 4, flat: 25 });
        assert_eq!(final_arity(&spec(&[4])).flat, 4);
        assert_eq!(final_arity(&spec(&[3, 3])).flat, 5);
    }
}
