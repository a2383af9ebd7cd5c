use std::collections::HashSet;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::group::OrderedGroup;

/// All products of at most `radius` generator letters, deduplicated.
///
/// Elements are listed in breadth-first order, so the identity comes first
/// and shorter words precede longer ones.
#[derive(Clone, Debug)]
pub struct Ball {
    pub radius: usize,
    pub elements: Vec<Element>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.elements.contains(x)
    }
}

/// The generators and their inverses, in generator order.
pub fn letters<G: OrderedGroup + ?Sized>(group: &G) -> Vec<Element> {
    let mut out = Vec::new();
    for (_, g) in group.generators() {
        let gi = group.inv(&g);
        out.push(g);
        out.push(gi);
    }
    out
}

pub fn enumerate_ball<G: OrderedGroup + ?Sized>(
    group: &G,
    radius: usize,
    cap: usize,
) -> Result<Ball> {
    let letters = letters(group);
    let id = group.identity();
    let mut seen: HashSet<Element> = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut frontier_start = 0;
    for r in 1..=radius {
        let frontier_end = elements.len();
        for i in frontier_start..frontier_end {
            for l in &letters {
                let z = group.mul(&elements[i], l);
                if seen.insert(z.clone()) {
                    elements.push(z);
                    if elements.len() > cap {
                        return Err(Error::BallOverflow { cap, radius: r });
                    }
                }
            }
        }
        frontier_start = frontier_end;
    }
    Ok(Ball { radius, elements })
}
