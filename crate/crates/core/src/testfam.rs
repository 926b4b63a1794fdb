//! Shared unit-test families: the worked examples used across the module
//! tests, built directly from their story data.

use crate::coalition::Coalition;
use crate::game::Orientation;
use crate::rational::ratio;
use crate::{Game, Rational, StrategicGame};

pub fn c(players: &[usize]) -> Coalition {
    Coalition::from_players(players.iter().copied())
}

pub fn q(v: i64) -> Rational {
    ratio(v, 1)
}

/// Worths in the order {1}, {2}, {3}, {12}, {13}, {23}, {123}.
pub fn game3(orientation: Orientation, w: [Rational; 7]) -> Game {
    let [v1, v2, v3, v12, v13, v23, vn] = w;
    Game::from_entries(
        3,
        orientation,
        [
            (c(&[0]), v1),
            (c(&[1]), v2),
            (c(&[2]), v3),
            (c(&[0, 1]), v12),
            (c(&[0, 2]), v13),
            (c(&[1, 2]), v23),
            (c(&[0, 1, 2]), vn),
        ],
    )
    .unwrap()
}

pub fn game3_int(orientation: Orientation, w: [i64; 7]) -> Game {
    game3(orientation, w.map(q))
}

/// Three heirs dividing an estate of 3: heirs 1 and 2 may litigate (L), and
/// heir 3 may respond (R). Litigation shifts the division but costs every
/// heir 1/4 per round.
pub fn heirs() -> StrategicGame {
    let u = Game::from_entries(3, Orientation::Value, [(c(&[0, 1, 2]), q(3))]).unwrap();
    let v = game3(
        Orientation::Value,
        [
            ratio(-1, 4),
            ratio(-1, 4),
            ratio(-1, 4),
            ratio(5, 2),
            ratio(-1, 2),
            ratio(-1, 2),
            ratio(9, 4),
        ],
    );
    let w = game3(
        Orientation::Value,
        [
            ratio(-1, 2),
            ratio(-1, 2),
            ratio(-1, 2),
            q(1),
            q(-1),
            q(-1),
            ratio(3, 2),
        ],
    );
    // Strategy order: player 1 {NL, L}, player 2 {NL, L}, player 3 {NR, R}.
    let table: Vec<Game> = (0..8)
        .map(|idx| match idx {
            6 => v.clone(), // (L, L, NR)
            7 => w.clone(), // (L, L, R)
            _ => u.clone(),
        })
        .collect();
    StrategicGame::new(vec![2, 2, 2], table).unwrap()
}

/// Three companies sharing runway-style project costs; company 1 decides
/// whether to apply for a subsidy that shaves 10 off every project.
pub fn subsidy() -> StrategicGame {
    let with_subsidy = Game::airport(&[q(90), q(190), q(290)]).unwrap();
    let without = Game::airport(&[q(100), q(200), q(300)]).unwrap();
    StrategicGame::new(vec![2, 1, 1], vec![with_subsidy, without]).unwrap()
}

/// Three equal parties; party 2 picks a coalition partner, yielding one of
/// two simple games.
pub fn parliament() -> StrategicGame {
    let with_first = game3_int(Orientation::Value, [0, 0, 0, 1, 0, 0, 1]);
    let with_third = game3_int(Orientation::Value, [0, 0, 0, 0, 0, 1, 1]);
    StrategicGame::new(vec![1, 2, 1], vec![with_first, with_third]).unwrap()
}

/// Two balanced games whose guarantee transform has an empty core.
pub fn core_empty_example() -> StrategicGame {
    let left = game3_int(Orientation::Value, [1, 3, 1, 7, 6, 1, 9]);
    let right = game3_int(Orientation::Value, [1, 1, 1, 2, 7, 9, 10]);
    StrategicGame::new(vec![1, 2, 1], vec![left, right]).unwrap()
}

/// Two convex games whose guarantee transform is not convex.
pub fn convexity_example() -> StrategicGame {
    let up = game3_int(Orientation::Value, [2, 1, 3, 4, 7, 4, 9]);
    let down = game3_int(Orientation::Value, [1, 4, 2, 5, 3, 6, 9]);
    StrategicGame::new(vec![2, 1, 1], vec![up, down]).unwrap()
}

/// A 2x2 airport family whose minmax transform is balanced even though no
/// pivot player exists.
pub fn airport_no_pivot_example() -> StrategicGame {
    let games = vec![
        Game::airport(&[q(1), q(8), q(2)]).unwrap(),  // (U, L)
        Game::airport(&[q(2), q(9), q(5)]).unwrap(),  // (U, R)
        Game::airport(&[q(5), q(10), q(7)]).unwrap(), // (D, L)
        Game::airport(&[q(6), q(7), q(9)]).unwrap(),  // (D, R)
    ];
    StrategicGame::new(vec![2, 2, 1], games).unwrap()
}

/// Four superadditive balanced two-player games whose maxmax transform is
/// neither superadditive nor balanced.
pub fn maxmax_example() -> StrategicGame {
    let rows = [[4, 3, 10], [2, 5, 9], [2, 4, 7], [6, 1, 7]];
    let games: Vec<Game> = rows
        .iter()
        .map(|&[v1, v2, vn]| {
            Game::from_entries(
                2,
                Orientation::Value,
                [(c(&[0]), q(v1)), (c(&[1]), q(v2)), (c(&[0, 1]), q(vn))],
            )
            .unwrap()
        })
        .collect();
    StrategicGame::new(vec![4, 1], games).unwrap()
}
