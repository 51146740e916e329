use std::collections::HashMap;

use sepgraph_core::{GraphBuilder, Layer, Letter, SeparatedGraph};

use crate::ball::{Alphabet, Ball};
use crate::convex::{prune_allowed_balls, stable_core};
use crate::error::SubshiftError;
use crate::recode::{ball_recode, RecodedAlphabet, Symbol};

/// The separated graph of a 1-step subshift with its dictionary.
#[derive(Debug, Clone)]
pub struct Representation {
    pub graph: SeparatedGraph,
    /// `E^{0,0}`: the allowed 1-balls; ball `i` is the vertex `Bi`.
    pub balls: Vec<Ball>,
    /// `E^{0,1} = A^[1:Omega]`.
    pub symbols: RecodedAlphabet,
    /// Layer-0 vertices spanning the full clopen corner `K`.
    pub corner: Vec<String>,
}

impl Representation {
    pub fn ball_vertex(&self, ball: &Ball) -> Option<&str> {
        self.symbols.ball_index(ball).map(|i| self.graph.vertex_name(self.vertex_of(i)))
    }

    fn vertex_of(&self, ball: usize) -> sepgraph_core::VertexId {
        self.graph.vertex_by_name(&ball_name(ball)).expect("ball vertex")
    }
}

/// A finite type subshift: its allowed `R`-balls, the recoding to a 1-step
/// subshift and the representing graph.
#[derive(Debug, Clone)]
pub struct FiniteTypeRepresentation {
    pub allowed: Vec<Ball>,
    /// `A^[R-1]`, absent when `R = 1`.
    pub recoding: Option<RecodedAlphabet>,
    /// Allowed 1-balls of the 1-step recoding.
    pub one_step: Vec<Ball>,
    pub representation: Representation,
}

fn ball_name(i: usize) -> String {
    format!("B{i}")
}

/// Builds `(E, C)` with `E^{0,0}` the allowed 1-balls, `E^{0,1}` the symbols
/// `[B <a B']`, edges `[B <a B']_+` into `B` and `[B <a B']_-` into `B'`, and
/// `C_B = {X_B(s) : 1 != s in B}`.
pub fn represent_one_step(letters: &Alphabet, allowed: &[Ball]) -> Result<Representation, SubshiftError> {
    if allowed.is_empty() {
        return Err(SubshiftError::EmptyBallSet);
    }
    if let Some(b) = allowed.iter().find(|b| b.radius() != 1) {
        return Err(SubshiftError::InvalidBall(format!("expected radius 1, found {}", b.radius())));
    }
    let mut balls: Vec<Ball> = allowed.iter().map(Ball::untagged).collect();
    balls.sort();
    balls.dedup();
    let core = stable_core(&balls);
    if let Some(b) = balls.iter().find(|b| !core.contains(b)) {
        let words: Vec<String> = b.words().iter().map(|w| letters.render(w)).collect();
        return Err(SubshiftError::UnstableBallSet(format!("{{{}}}", words.join(", "))));
    }

    let mut containing: HashMap<Letter, Vec<usize>> = HashMap::new();
    for (j, ball) in balls.iter().enumerate() {
        for l in ball.letters() {
            containing.entry(l).or_default().push(j);
        }
    }
    let mut symbols = Vec::new();
    for (i, target) in balls.iter().enumerate() {
        for a in target.letters().into_iter().filter(|l| l.inverse) {
            for &j in containing.get(&a.inv()).map(Vec::as_slice).unwrap_or(&[]) {
                symbols.push(Symbol { target: i, letter: a.index, source: j });
            }
        }
    }
    symbols.sort();
    let alphabet = RecodedAlphabet::from_parts(letters, 1, balls.clone(), symbols);
    let tokens = alphabet.alphabet().names;

    let mut b = GraphBuilder::new();
    for i in 0..balls.len() {
        b.vertex(&ball_name(i), Layer::Zero);
    }
    for (s, token) in alphabet.symbols().iter().zip(&tokens) {
        b.vertex(token, Layer::One);
        b.edge(&format!("{token}+"), token, &ball_name(s.target));
        b.edge(&format!("{token}-"), token, &ball_name(s.source));
    }
    let mut members: HashMap<(usize, Letter), Vec<String>> = HashMap::new();
    for (sym, token) in alphabet.symbols().iter().zip(&tokens) {
        members.entry((sym.target, Letter::neg(sym.letter))).or_default().push(format!("{token}+"));
        members.entry((sym.source, Letter::pos(sym.letter))).or_default().push(format!("{token}-"));
    }
    for (i, ball) in balls.iter().enumerate() {
        for s in ball.letters() {
            let group = format!("X[{}]({})", ball_name(i), letters.letter_name(s));
            let edges = members.get(&(i, s)).map(Vec::as_slice).unwrap_or(&[]);
            b.group(&ball_name(i), &group, edges);
        }
    }
    let graph = b.build().map_err(|e| SubshiftError::InvalidBall(e.to_string()))?;
    let corner = (0..balls.len()).map(ball_name).collect();
    Ok(Representation { graph, balls, symbols: alphabet, corner })
}

/// Prunes at radius `R`, recodes by `R - 1` to a 1-step subshift and
/// represents it.
pub fn represent_finite_type(
    letters: &Alphabet,
    radius: usize,
    forbidden: &[Ball],
    budget: usize,
) -> Result<FiniteTypeRepresentation, SubshiftError> {
    if radius == 0 {
        return Err(SubshiftError::RadiusTooSmall { radius, n: 0 });
    }
    let allowed = prune_allowed_balls(letters.len(), radius, forbidden, budget)?;
    if allowed.is_empty() {
        return Err(SubshiftError::EmptyBallSet);
    }
    if radius == 1 {
        let representation = represent_one_step(letters, &allowed)?;
        return Ok(FiniteTypeRepresentation { one_step: allowed.clone(), allowed, recoding: None, representation });
    }
    let recoding = RecodedAlphabet::new(letters, &allowed, radius - 1)?;
    let mut one_step = allowed.iter().map(|c| ball_recode(c, &recoding)).collect::<Result<Vec<_>, _>>()?;
    one_step.sort();
    one_step.dedup();
    let representation = represent_one_step(&recoding.alphabet(), &one_step)?;
    Ok(FiniteTypeRepresentation { allowed, recoding: Some(recoding), one_step, representation })
}
