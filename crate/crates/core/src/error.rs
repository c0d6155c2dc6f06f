/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A return series with no elements was supplied.
    #[error("return series is empty")]
    EmptySeries,

    /// Ratio statistics need at least two returns.
    #[error("series of length {0} is degenerate: ratio statistics need at least 2 returns")]
    DegenerateSeries(usize),

    /// A return fell below the -100% floor.
    #[error("return at index {index} is {value}, below the -100% floor")]
    ReturnBelowFloor { index: usize, value: f64 },

    /// A return was NaN or infinite.
    #[error("return at index {index} is not a finite number")]
    NonFiniteReturn { index: usize },

    /// The per-period bound B must lie strictly inside (0, 1).
    #[error("bound B must lie in (0, 1), got {0}")]
    BoundOutOfRange(f64),

    /// The upper return level c must be positive.
    #[error("gain level c must be positive, got {0}")]
    GainNotPositive(f64),

    /// The mixture fraction must lie strictly inside (0, 1).
    #[error("gain fraction alpha must lie in (0, 1), got {0}")]
    FractionOutOfRange(f64),

    /// Two-sided mixtures cannot place the gain level above the bound.
    #[error("two-sided gain level c = {gain} exceeds the bound B = {bound}")]
    GainAboveBound { gain: f64, bound: f64 },

    /// The one-sided Sharpe frontier is unbounded once B reaches 1.
    #[error("frontier diverges at B = {0}: losing sequences reach any ratio when total loss is allowed")]
    Divergent(f64),

    /// No candidate sequence satisfies the constraints with a defined ratio.
    #[error("no feasible candidate sequence with a defined ratio")]
    Infeasible,

    /// An invalid grid or sweep request.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// An invalid simulation specification.
    #[error("invalid simulation spec: {0}")]
    InvalidSpec(String),

    /// CSV input could not be read or parsed.
    #[error("csv input: {0}")]
    Csv(String),
}

pub type Result<T> = std::result::Result<T, Error>;
