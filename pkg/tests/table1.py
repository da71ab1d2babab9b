"""Triangle distributions of all configurations v_3, v = 7..13 (t: count)."""

TABLE_1 = {
    7: {28: 1},
    8: {24: 1},
    9: {18: 1, 20: 1, 21: 1},
    10: {17: 2, 18: 3, 19: 2, 20: 3},
    11: {15: 1, 16: 10, 17: 7, 18: 7, 19: 3, 20: 1, 21: 1, 22: 1},
    12: {12: 1, 13: 8, 14: 22, 15: 48, 16: 60, 17: 41, 18: 24, 19: 14, 20: 5, 21: 3, 22: 1, 24: 2},
    13: {
        9: 1, 10: 2, 11: 12, 12: 67, 13: 190, 14: 371, 15: 418, 16: 409, 17: 265, 18: 156,
        19: 74, 20: 37, 21: 14, 22: 9, 23: 4, 24: 3, 25: 1, 26: 1, 28: 1, 32: 1,
    },
}
