use serde::Serialize;

use super::QuiverError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Arrow {
    /// 1-based source vertex.
    pub source: usize,
    /// 1-based target vertex.
    pub target: usize,
    pub label: String,
}

/// A finite quiver on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        for (i, a) in arrows.iter().enumerate() {
            if a.source == 0 || a.source > vertices || a.target == 0 || a.target > vertices {
                return Err(QuiverError::BadVertex {
                    label: a.label.clone(),
                    vertices,
                });
            }
            if a.label.is_empty() || !a.label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(QuiverError::BadLabel(a.label.clone()));
            }
            if arrows[..i].iter().any(|b| b.label == a.label) {
                return Err(QuiverError::DuplicateLabel(a.label.clone()));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// The oriented cycle `1 → 2 → … → n → 1` with arrows `a1, …, an`.
    pub fn cyclic(n: usize) -> Self {
        let arrows = (1..=n)
            .map(|i| Arrow {
                source: i,
                target: i % n + 1,
                label: format!("a{i}"),
            })
            .collect();
        Quiver { vertices: n, arrows }
    }

    /// One vertex with a single loop `t`.
    pub fn single_loop() -> Self {
        Quiver {
            vertices: 1,
            arrows: vec![Arrow {
                source: 1,
                target: 1,
                label: "t".into(),
            }],
        }
    }

    /// The linearly oriented `A_n` quiver `1 → 2 → … → n`.
    pub fn linear(n: usize) -> Self {
        let arrows = (1..n)
            .map(|i| Arrow {
                source: i,
                target: i + 1,
                label: format!("b{i}"),
            })
            .collect();
        Quiver { vertices: n, arrows }
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, index: usize) -> &Arrow {
        &self.arrows[index]
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Arrow indices leaving each vertex (0-based vertex slots).
    pub(crate) fn out_arrows(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertices];
        for (i, a) in self.arrows.iter().enumerate() {
            out[a.source - 1].push(i);
        }
        out
    }

    /// Parses the quiver file format: the vertex count on the first line,
    /// then one `source target label` triple per line. Blank lines and
    /// lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, QuiverError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, first) = lines.next().ok_or(QuiverError::Syntax {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let vertices: usize = first.parse().map_err(|_| QuiverError::Syntax {
            line,
            msg: format!("expected vertex count, found `{first}`"),
        })?;
        if vertices > MAX_VERTICES {
            return Err(QuiverError::Syntax {
                line,
                msg: format!("more than {MAX_VERTICES} vertices"),
            });
        }
        let mut arrows = Vec::new();
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let [s, t, label] = parts[..] else {
                return Err(QuiverError::Syntax {
                    line,
                    msg: "expected `source target label`".into(),
                });
            };
            let num = |x: &str| {
                x.parse::<usize>().map_err(|_| QuiverError::Syntax {
                    line,
                    msg: format!("bad vertex `{x}`"),
                })
            };
            arrows.push(Arrow {
                source: num(s)?,
                target: num(t)?,
                label: label.to_string(),
            });
        }
        Quiver::new(vertices, arrows)
    }

    pub fn to_file_string(&self) -> String {
        let mut s = format!("{}\n", self.vertices);
        for a in &self.arrows {
            s.push_str(&format!("{} {} {}\n", a.source, a.target, a.label));
        }
        s
    }
}

const MAX_VERTICES: usize = 1 << 16;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_format() {
        let q = Quiver::parse("# two loops\n2\n1 2 a\n2 1 b\n\n1 1 c\n").unwrap();
        assert_eq!(q.vertices(), 2);
        assert_eq!(q.arrows().len(), 3);
        assert_eq!(Quiver::parse(&q.to_file_string()).unwrap(), q);
    }

    #[test]
    fn file_errors() {
        assert!(Quiver::parse("").is_err());
        assert!(Quiver::parse("x").is_err());
        assert!(Quiver::parse("2\n1 3 a").is_err());
        assert!(Quiver::parse("2\n0 1 a").is_err());
        assert!(Quiver::parse("2\n1 2 a\n2 1 a").is_err());
        assert!(Quiver::parse("2\n1 2").is_err());
        assert!(Quiver::parse("2\n1 2 a-b").is_err());
    }

    #[test]
    fn builtins() {
        let c = Quiver::cyclic(3);
        assert_eq!(c.arrow(2).source, 3);
        assert_eq!(c.arrow(2).target, 1);
        assert_eq!(Quiver::linear(2).arrows().len(), 1);
        assert_eq!(Quiver::single_loop().arrow(0).label, "t");
    }
}
