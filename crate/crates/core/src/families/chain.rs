use serde::{Deserialize, Serialize};

use crate::lincode::{cyclic_size, LinearCode, Word};
use crate::rational::{int, ratio, serde_pq, Rational};

/// Word picked at one stage of the chain. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChosenWord {
    pub word: String,
    pub support: Vec<usize>,
    pub ell: usize,
    pub rc_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStage {
    pub n: usize,
    pub size: usize,
    #[serde(with = "serde_pq::option")]
    pub d_over_gamma: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chosen: Option<ChosenWord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainInequality {
    pub n: usize,
    #[serde(with = "serde_pq")]
    pub rhs: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainChecks {
    pub n_at_most_d_over_gamma: bool,
    pub quotient_sizes: bool,
    pub weight_drop: bool,
    pub final_constant_hamming: bool,
    pub final_size_at_most_ring: bool,
    pub product_formula: bool,
    pub length_decomposition: bool,
    pub chain_inequality: ChainInequality,
}

impl ChainChecks {
    /// All structural checks plus the length inequality.
    pub fn all_hold(&self) -> bool {
        self.quotient_sizes
            && self.weight_drop
            && self.final_constant_hamming
            && self.final_size_at_most_ring
            && self.product_formula
            && self.length_decomposition
            && self.chain_inequality.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCertificate {
    pub ring: String,
    #[serde(with = "serde_pq")]
    pub gamma: Rational,
    pub r: usize,
    pub stages: Vec<ChainStage>,
    pub checks: ChainChecks,
}

impl ChainCertificate {
    /// True when the hypothesis holds and so does every check.
    pub fn verified(&self) -> bool {
        self.checks.n_at_most_d_over_gamma && self.checks.all_hold()
    }
}

#[derive(Debug, Clone)]
pub struct ResidualChain {
    pub codes: Vec<LinearCode>,
    pub chosen: Vec<Word>,
    pub certificate: ChainCertificate,
}

fn pick(code: &LinearCode) -> Option<(Word, usize)> {
    let n = code.n();
    let ring = code.ring();
    let mut best: Option<(usize, usize, &Word)> = None;
    for c in code.nonzero_words() {
        let ell = c.ell();
        if ell >= n {
            continue;
        }
        let rc = cyclic_size(ring, c);
        let better = match best {
            None => true,
            Some((brc, bell, _)) => rc > brc || (rc == brc && ell < bell),
        };
        if better {
            best = Some((rc, ell, c));
        }
    }
    best.map(|(rc, _, c)| (c.clone(), rc))
}

/// Repeatedly pass to the residual code with respect to a nonzero word of
/// non-full support until every nonzero word has full support.
///
/// At each stage the chosen word maximises `|Rc|`, then minimises its support
/// size, then comes first in the code's word order.
pub fn residual_chain(code: &LinearCode) -> ResidualChain {
    let ring = code.ring();
    let mut codes = vec![code.clone()];
    let mut chosen = Vec::new();
    let mut rc_sizes = Vec::new();
    while let Some((c, rc)) = pick(codes.last().unwrap()) {
        let next = codes.last().unwrap().residual_by(&c);
        chosen.push(c);
        rc_sizes.push(rc);
        codes.push(next);
    }
    let r = chosen.len();

    let stages: Vec<ChainStage> = codes
        .iter()
        .enumerate()
        .map(|(i, ci)| ChainStage {
            n: ci.n(),
            size: ci.size(),
            d_over_gamma: ci.min_hom_norm(),
            chosen: chosen.get(i).map(|c| ChosenWord {
                word: c.format(ring),
                support: c.support().iter().map(|p| p + 1).collect(),
                ell: c.ell(),
                rc_size: rc_sizes[i],
            }),
        })
        .collect();

    let n_at_most_d_over_gamma = match code.min_hom_norm() {
        Some(d) => int(code.n() as i64) <= d,
        None => true,
    };
    let quotient_sizes = (0..r).all(|i| codes[i + 1].size() * rc_sizes[i] == codes[i].size());
    let weight_drop = (0..r).all(|i| match (codes[i].min_hom_norm(), codes[i + 1].min_hom_norm()) {
        (Some(d), Some(next)) => {
            let floor = d - int(chosen[i].ell() as i64);
            floor > int(0) && next >= floor
        }
        // a zero residual code has no nonzero word to violate the drop
        (Some(d), None) => d > int(chosen[i].ell() as i64),
        (None, _) => false,
    });
    let last = codes.last().unwrap();
    let final_constant_hamming = last.nonzero_words().all(|c| c.ell() == last.n());
    let final_size_at_most_ring = last.size() <= ring.size();
    let product_formula = rc_sizes.iter().product::<usize>() * last.size() == code.size();
    let length_decomposition = chosen.iter().map(Word::ell).sum::<usize>() + last.n() == code.n();
    let chain_inequality = {
        let rhs = match (rc_sizes.first(), code.min_hom_norm()) {
            (Some(&rc0), Some(d)) => ratio(rc0 as i64 - 1, rc0 as i64) * d + int(r as i64),
            _ => int(r as i64),
        };
        ChainInequality { n: code.n(), holds: int(code.n() as i64) >= rhs, rhs }
    };

    let certificate = ChainCertificate {
        ring: ring.spec().to_string(),
        gamma: code.table().gamma().clone(),
        r,
        stages,
        checks: ChainChecks {
            n_at_most_d_over_gamma,
            quotient_sizes,
            weight_drop,
            final_constant_hamming,
            final_size_at_most_ring,
            product_formula,
            length_decomposition,
            chain_inequality,
        },
    };
    ResidualChain { codes, chosen, certificate }
}
