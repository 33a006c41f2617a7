"""
Published reference tables for the 3-neighborhood null boundary rules

These are fixtures to check the derived tables against. Nothing in the
library computes with them.
"""

# Reversible rules (62)
REVERSIBLE_RULES = frozenset({
    15, 23, 27, 30, 39, 43, 45, 51, 53, 54, 57,
    58, 60, 75, 77, 78, 83, 85, 86, 89, 90, 92,
    99, 101, 102, 105, 106, 108, 113, 114, 120, 135, 141,
    142, 147, 149, 150, 153, 154, 156, 163, 165, 166, 169,
    170, 172, 177, 178, 180, 195, 197, 198, 201, 202, 204,
    210, 212, 216, 225, 228, 232, 240,
})

BALANCED_IRREVERSIBLE_RULES = frozenset({29, 46, 71, 116, 139, 184, 209, 226})

# Class table: class -> (RMTs of the unique nodes, member rules)
CLASS_TABLE = {
    'I': (
        ({0, 1, 2, 3}, {4, 5, 6, 7}),
        {51, 53, 54, 57, 58, 60, 83, 85, 86,
         89, 90, 92, 99, 101, 102, 105, 106, 108,
         147, 149, 150, 153, 154, 156, 163, 165, 166,
         169, 170, 172, 195, 197, 198, 201, 202, 204},
    ),
    'II': (
        ({0, 1, 4, 5}, {2, 3, 6, 7}),
        {15, 30, 45, 60, 75, 90, 105, 120, 135,
         150, 165, 180, 195, 210, 225, 240},
    ),
    'III': (
        ({0, 1, 6, 7}, {2, 3, 4, 5}),
        {15, 23, 27, 39, 43, 51, 77, 78, 85,
         86, 89, 90, 101, 102, 105, 106, 113, 114,
         141, 142, 149, 150, 153, 154, 165, 166, 169,
         170, 177, 178, 204, 212, 216, 228, 232, 240},
    ),
    'IV': (
        ({0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 4, 5}, {2, 3, 6, 7}),
        {60, 90, 105, 150, 165, 195},
    ),
    'V': (
        ({0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 6, 7}, {2, 3, 4, 5}),
        {51, 85, 86, 89, 90, 101, 102, 105, 106, 149,
         150, 153, 154, 165, 166, 169, 170, 204},
    ),
    'VI': (
        ({0, 1, 4, 5}, {2, 3, 6, 7}, {0, 1, 6, 7}, {2, 3, 4, 5}),
        {15, 90, 105, 150, 165, 240},
    ),
}

# Class of R(i) -> [(rules, class of R(i+1))]
CLASS_TRANSITIONS = {
    'I': [
        ({51, 60, 195, 204}, 'I'),
        ({85, 90, 165, 170}, 'II'),
        ({102, 105, 150, 153}, 'III'),
        ({53, 58, 83, 92, 163, 172, 197, 202}, 'IV'),
        ({54, 57, 99, 108, 147, 156, 198, 201}, 'V'),
        ({86, 89, 101, 106, 149, 154, 166, 169}, 'VI'),
    ],
    'II': [
        ({15, 30, 45, 60, 75, 90, 105, 120, 135,
          150, 165, 180, 195, 210, 225, 240}, 'I'),
    ],
    'III': [
        ({15, 51, 204, 240}, 'I'),
        ({85, 105, 150, 170}, 'II'),
        ({90, 102, 153, 165}, 'III'),
        ({23, 43, 77, 113, 142, 178, 212, 232}, 'IV'),
        ({27, 39, 78, 114, 141, 177, 216, 228}, 'V'),
        ({86, 89, 101, 106, 149, 154, 166, 169}, 'VI'),
    ],
    'IV': [
        ({60, 195}, 'I'),
        ({90, 165}, 'IV'),
        ({105, 150}, 'V'),
    ],
    'V': [
        ({51, 204}, 'I'),
        ({85, 170}, 'II'),
        ({102, 153}, 'III'),
        ({86, 89, 90, 101, 105, 106, 149, 150,
          154, 165, 166, 169}, 'VI'),
    ],
    'VI': [
        ({15, 240}, 'I'),
        ({105, 150}, 'IV'),
        ({90, 165}, 'V'),
    ],
}

# First rule -> class of R(2)
FIRST_RULES = {3: 'I', 12: 'I', 5: 'II', 10: 'II', 6: 'III', 9: 'III'}

# Class of R(n) -> rules usable as R(n)
LAST_RULES = {
    'I': {17, 20, 65, 68},
    'II': {5, 20, 65, 80},
    'III': {5, 17, 68, 80},
    'IV': {20, 65},
    'V': {17, 68},
    'VI': {5, 80},
}
