//! Bracketed constituency-tree parsing and grandparent-annotated production
//! extraction.

use std::fmt;

use thiserror::Error;

/// Sentinel grandparent label for the root node.
pub const ROOT_LABEL: &str = "ROOT";

/// A constituency tree node: either a branch over child constituents or a
/// preterminal covering one terminal word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseTree {
    pub label: String,
    pub node: TreeNode,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeNode {
    Branch(Vec<ParseTree>),
    Leaf(String),
}

impl ParseTree {
    pub fn branch(label: impl Into<String>, children: Vec<ParseTree>) -> Self {
        ParseTree {
            label: label.into(),
            node: TreeNode::Branch(children),
        }
    }

    pub fn leaf(label: impl Into<String>, terminal: impl Into<String>) -> Self {
        ParseTree {
            label: label.into(),
            node: TreeNode::Leaf(terminal.into()),
        }
    }

    /// Serialize back to bracketed form, whitespace-normalized.
    pub fn serialize(&self) -> String {
        match &self.node {
            TreeNode::Leaf(word) => format!("({} {})", self.label, word),
            TreeNode::Branch(children) => {
                let inner: Vec<String> = children.iter().map(|c| c.serialize()).collect();
                format!("({} {})", self.label, inner.join(" "))
            }
        }
    }

    /// Total number of labeled nodes (each yields exactly one production).
    pub fn node_count(&self) -> usize {
        match &self.node {
            TreeNode::Leaf(_) => 1,
            TreeNode::Branch(children) => {
                1 + children.iter().map(|c| c.node_count()).sum::<usize>()
            }
        }
    }
}

/// One grammar production annotated with the parent of its left-hand side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProductionFeature {
    pub parent: String,
    pub grandparent: String,
    pub rhs: Vec<String>,
}

impl ProductionFeature {
    /// Canonical rendering `parent^grandparent→rhs`, children joined by `_`.
    pub fn rendered(&self) -> String {
        format!("{}^{}\u{2192}{}", self.parent, self.grandparent, self.rhs.join("_"))
    }
}

impl fmt::Display for ProductionFeature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rendered())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TreeError {
    #[error("unbalanced at offset {0}")]
    Unbalanced(usize),
    #[error("empty node at offset {0}")]
    EmptyNode(usize),
    #[error("unexpected trailing input at offset {0}")]
    TrailingInput(usize),
    #[error("mixed terminal and constituent children at offset {0}")]
    MixedChildren(usize),
    #[error("empty input")]
    EmptyInput,
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn read_atom(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len()
            && !self.chars[self.pos].is_whitespace()
            && self.chars[self.pos] != '('
            && self.chars[self.pos] != ')'
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn parse_node(&mut self) -> Result<ParseTree, TreeError> {
        debug_assert_eq!(self.peek(), Some('('));
        let open = self.pos;
        self.pos += 1;
        self.skip_ws();

        let label = self.read_atom();
        if label.is_empty() {
            return Err(TreeError::EmptyNode(open));
        }

        let mut children: Vec<ParseTree> = Vec::new();
        let mut terminals: Vec<String> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(')') => {
                    self.pos += 1;
                    break;
                }
                Some('(') => {
                    children.push(self.parse_node()?);
                }
                Some(_) => {
                    terminals.push(self.read_atom());
                }
                None => return Err(TreeError::Unbalanced(self.pos)),
            }
        }

        match (children.is_empty(), terminals.len()) {
            (false, 0) => Ok(ParseTree {
                label,
                node: TreeNode::Branch(children),
            }),
            (true, 1) => Ok(ParseTree {
                label,
                node: TreeNode::Leaf(terminals.pop().expect("one terminal")),
            }),
            (true, 0) => Err(TreeError::EmptyNode(open)),
            _ => Err(TreeError::MixedChildren(open)),
        }
    }
}

/// Parse one bracketed tree, e.g. `(NP (NN diagnosis))`. Whitespace between
/// tokens is ignored. An extra outer wrapper `((S ...))` in Penn style is
/// unwrapped when its label is empty.
pub fn parse_bracketed(input: &str) -> Result<ParseTree, TreeError> {
    let chars: Vec<char> = input.chars().collect();
    let mut p = Parser {
        chars: &chars,
        pos: 0,
    };
    p.skip_ws();
    match p.peek() {
        None => return Err(TreeError::EmptyInput),
        Some('(') => {}
        Some(_) => return Err(TreeError::EmptyNode(p.pos)),
    }

    // Penn treebank files wrap each tree in an unlabeled pair of brackets:
    // "( (S ...) )". Detect by a '(' immediately followed by ws + '('.
    let save = p.pos;
    p.pos += 1;
    p.skip_ws();
    let wrapped = p.peek() == Some('(');
    p.pos = save;

    let tree = if wrapped {
        p.pos += 1;
        p.skip_ws();
        let inner = p.parse_node()?;
        p.skip_ws();
        match p.peek() {
            Some(')') => p.pos += 1,
            Some(_) => return Err(TreeError::TrailingInput(p.pos)),
            None => return Err(TreeError::Unbalanced(p.pos)),
        }
        inner
    } else {
        p.parse_node()?
    };

    p.skip_ws();
    if p.pos < chars.len() {
        return Err(TreeError::TrailingInput(p.pos));
    }
    Ok(tree)
}

fn collect_productions(
    tree: &ParseTree,
    grandparent: &str,
    out: &mut Vec<ProductionFeature>,
) {
    let rhs = match &tree.node {
        TreeNode::Leaf(word) => vec![word.clone()],
        TreeNode::Branch(children) => children.iter().map(|c| c.label.clone()).collect(),
    };
    out.push(ProductionFeature {
        parent: tree.label.clone(),
        grandparent: grandparent.to_string(),
        rhs,
    });
    if let TreeNode::Branch(children) = &tree.node {
        for child in children {
            collect_productions(child, &tree.label, out);
        }
    }
}

/// Emit one production per node, pre-order, annotated with the node's own
/// parent label (`ROOT` at the top). Terminal productions are included.
pub fn extract_productions(tree: &ParseTree) -> Vec<ProductionFeature> {
    let mut out = Vec::new();
    collect_productions(tree, ROOT_LABEL, &mut out);
    out
}
