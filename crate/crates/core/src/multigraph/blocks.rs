use super::Multigraph;

/// Blocks (maximal 2-connected pieces, bridges, isolated vertices) of a
/// multigraph. Parallel copies of a pair live in the block of the
/// skeleton edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets, each sorted; the list is sorted lexicographically.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// Block-cut tree edges as `(block index, cut vertex)`.
    pub block_cut_tree: Vec<(usize, usize)>,
}

impl BlockDecomposition {
    /// Indices of blocks containing `v`.
    pub fn blocks_of(&self, v: usize) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].binary_search(&v).is_ok())
            .collect()
    }
}

struct Tarjan<'a> {
    g: &'a Multigraph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

impl Tarjan<'_> {
    fn visit(&mut self, v: usize, parent: Option<usize>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        let mut children = 0;
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i].0;
            if self.disc[w] == 0 {
                children += 1;
                self.stack.push((v, w));
                self.visit(w, Some(v));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    if parent.is_some() || children > 1 {
                        self.is_cut[v] = true;
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = self.stack.pop() {
                        block.push(a);
                        block.push(b);
                        if (a, b) == (v, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    self.blocks.push(block);
                }
            } else if Some(w) != parent && self.disc[w] < self.disc[v] {
                self.stack.push((v, w));
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

pub(super) fn decompose(g: &Multigraph) -> BlockDecomposition {
    let n = g.vertex_count();
    let mut t = Tarjan {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    for v in 0..n {
        if t.disc[v] == 0 {
            if g.neighbors(v).is_empty() {
                t.disc[v] = usize::MAX;
                t.blocks.push(vec![v]);
            } else {
                t.visit(v, None);
            }
        }
    }
    let mut blocks = t.blocks;
    blocks.sort();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| t.is_cut[v]).collect();
    let mut block_cut_tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &c in &cut_vertices {
            if b.binary_search(&c).is_ok() {
                block_cut_tree.push((i, c));
            }
        }
    }
    BlockDecomposition {
        blocks,
        cut_vertices,
        block_cut_tree,
    }
}
