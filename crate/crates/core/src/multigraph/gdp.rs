use super::Multigraph;

/// Shape of a single block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockFamily {
    /// `K_t^s`. Isolated vertices are `K_1` (with `s = 1`), a lone pair is `K_2^s`,
    /// and triangles are reported here rather than as cycles.
    Clique {
        t: usize,
        s: usize,
    },
    /// `C_t^s` with `t >= 4`.
    Cycle {
        t: usize,
        s: usize,
    },
    Neither,
}

impl BlockFamily {
    /// Common degree of the block's vertices inside the block, if regular.
    pub fn regularity(&self) -> Option<usize> {
        match *self {
            BlockFamily::Clique { t, s } => Some(s * (t - 1)),
            BlockFamily::Cycle { s, .. } => Some(2 * s),
            BlockFamily::Neither => None,
        }
    }

    /// Complete simple graph or odd simple cycle.
    pub fn is_gallai(&self) -> bool {
        match *self {
            BlockFamily::Clique { t, s } => s == 1 || t == 1,
            BlockFamily::Cycle { t, s } => s == 1 && t % 2 == 1,
            BlockFamily::Neither => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentClass {
    GallaiTree,
    GdpTreeOnly,
    NotGdpTree,
}

impl ComponentClass {
    pub fn is_gdp_tree(self) -> bool {
        !matches!(self, ComponentClass::NotGdpTree)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: Vec<usize>,
    pub class: ComponentClass,
    /// Blocks inside this component with their family tags.
    pub blocks: Vec<(Vec<usize>, BlockFamily)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GdpClassification {
    pub components: Vec<ComponentReport>,
}

impl GdpClassification {
    pub fn is_gdp_forest(&self) -> bool {
        self.components.iter().all(|c| c.class.is_gdp_tree())
    }

    /// Connected and a GDP-forest.
    pub fn is_gdp_tree(&self) -> bool {
        self.components.len() == 1 && self.is_gdp_forest()
    }

    pub fn is_gallai_tree(&self) -> bool {
        self.components.len() == 1 && self.components[0].class == ComponentClass::GallaiTree
    }
}

/// Tags the block induced by `vertices`. Multiplicities must be uniform.
pub(crate) fn block_family(g: &Multigraph, vertices: &[usize]) -> BlockFamily {
    let t = vertices.len();
    if t == 1 {
        return BlockFamily::Clique { t: 1, s: 1 };
    }
    let b = g.induced(vertices);
    let s = b.max_multiplicity();
    if b.pairs().any(|(_, _, m)| m != s) {
        return BlockFamily::Neither;
    }
    if b.pair_count() == t * (t - 1) / 2 {
        return BlockFamily::Clique { t, s };
    }
    if t >= 4 && b.pair_count() == t && (0..t).all(|v| b.simple_degree(v) == 2) {
        // A 2-connected 2-regular skeleton is a single cycle.
        return BlockFamily::Cycle { t, s };
    }
    BlockFamily::Neither
}

pub(super) fn classify(g: &Multigraph) -> GdpClassification {
    let decomposition = g.blocks();
    let tagged: Vec<(Vec<usize>, BlockFamily)> = decomposition
        .blocks
        .iter()
        .map(|b| (b.clone(), block_family(g, b)))
        .collect();
    let components = g
        .components()
        .into_iter()
        .map(|vertices| {
            let blocks: Vec<_> = tagged
                .iter()
                .filter(|(b, _)| vertices.binary_search(&b[0]).is_ok())
                .cloned()
                .collect();
            let class = if blocks.iter().all(|(_, f)| f.is_gallai()) {
                ComponentClass::GallaiTree
            } else if blocks.iter().all(|(_, f)| *f != BlockFamily::Neither) {
                ComponentClass::GdpTreeOnly
            } else {
                ComponentClass::NotGdpTree
            };
            ComponentReport {
                vertices,
                class,
                blocks,
            }
        })
        .collect();
    GdpClassification { components }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{make_family, Family};

    #[test]
    fn even_cycle_is_gdp_but_not_gallai() {
        let c4 = make_family(&Family::CycleMultiple { n: 4, q: 1 }).unwrap();
        let c = c4.classify_gdp();
        assert_eq!(c.components[0].class, ComponentClass::GdpTreeOnly);
        assert_eq!(
            c.components[0].blocks[0].1,
            BlockFamily::Cycle { t: 4, s: 1 }
        );
    }

    #[test]
    fn diamond_is_not_gdp() {
        let g = Multigraph::simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            g.classify_gdp().components[0].class,
            ComponentClass::NotGdpTree
        );
    }

    #[test]
    fn k5_is_gallai() {
        let k5 = make_family(&Family::CliqueMultiple { t: 5, q: 1 }).unwrap();
        let c = k5.classify_gdp();
        assert!(c.is_gallai_tree());
        assert_eq!(c.components[0].blocks[0].1.regularity(), Some(4));
    }

    #[test]
    fn non_uniform_multiplicity_is_neither() {
        let g = Multigraph::new(3, &[(0, 1, 2), (1, 2, 1), (0, 2, 1)]).unwrap();
        assert_eq!(
            g.classify_gdp().components[0].blocks[0].1,
            BlockFamily::Neither
        );
    }

    #[test]
    fn multiples_and_trivial_blocks() {
        let k24 = Multigraph::new(2, &[(0, 1, 4)]).unwrap();
        let c = k24.classify_gdp();
        assert_eq!(c.components[0].class, ComponentClass::GdpTreeOnly);
        assert_eq!(c.components[0].blocks[0].1.regularity(), Some(4));

        let k1 = Multigraph::empty(1);
        assert!(k1.classify_gdp().is_gallai_tree());

        let two = Multigraph::empty(2);
        assert!(two.classify_gdp().is_gdp_forest());
        assert!(!two.classify_gdp().is_gdp_tree());

        let c62 = make_family(&Family::CycleMultiple { n: 6, q: 2 }).unwrap();
        assert_eq!(
            c62.classify_gdp().components[0].blocks[0].1,
            BlockFamily::Cycle { t: 6, s: 2 }
        );
    }
}
