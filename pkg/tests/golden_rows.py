"""Every tabulated row: (table, n, type of X, residue predicates, type of the twist).

Predicates: r, q, d are allowed residues mod n (r mod n/2 for V-odd); omega is
"regular" or "singular" for the preimage of the point at infinity; parity is nu(J2) mod 2;
remark marks the pair read off the smoothness of the component containing infinity.
"""

ROWS = [
    ('smooth', 1, '[I_{0-0-0}]', {}, '[I*_{0-0-0}]'),
    ('smooth', 2, '[I*_{0-0-0}]', {'r': (0,)}, '[I_{0-0-0}]'),
    ('smooth', 2, '[II]', {'r': (1,)}, '[II]'),
    ('smooth', 3, '[III]', {}, '[IV]'),
    ('smooth', 4, '[VI]', {}, '[VI]'),
    ('smooth', 5, '[IX-3]', {'r': (1,)}, '[VIII-1]'),
    ('smooth', 5, '[IX-1]', {'r': (2,)}, '[VIII-3]'),
    ('smooth', 5, '[IX-4]', {'r': (3,)}, '[VIII-2]'),
    ('smooth', 5, '[IX-2]', {'r': (4,)}, '[VIII-4]'),
    ('smooth', 6, '[V]', {'r': (1,), 'q': (0,)}, '[V*]'),
    ('smooth', 6, '[V]', {'r': (5,), 'q': (3,)}, '[V*]'),
    ('smooth', 6, '[V*]', {'r': (1,), 'q': (3,)}, '[V]'),
    ('smooth', 6, '[V*]', {'r': (5,), 'q': (0,)}, '[V]'),
    ('smooth', 6, '[IV]', {'r': (2, 4)}, '[III]'),
    ('smooth', 8, '[VII*]', {'q': (1, 3)}, '[VII]'),
    ('smooth', 8, '[VII]', {'q': (5, 7)}, '[VII*]'),
    ('smooth', 10, '[VIII-1]', {'r': (2,)}, '[IX-3]'),
    ('smooth', 10, '[VIII-3]', {'r': (4,)}, '[IX-1]'),
    ('smooth', 10, '[VIII-2]', {'r': (6,)}, '[IX-4]'),
    ('smooth', 10, '[VIII-4]', {'r': (8,)}, '[IX-2]'),
    ('II', 1, '[I_{d-0-0}]', {}, '[I*_{d-0-0}]'),
    ('II', 2, '[I*_{d/2-0-0}]', {'r': (0,)}, '[I_{d/2-0-0}]'),
    ('II', 2, '[II*_{d/2-0}]', {'r': (1,), 'q': (0,)}, '[II_{d/2-0}]'),
    ('II', 2, '[II_{d/2-0}]', {'r': (1,), 'q': (1,)}, '[II*_{d/2-0}]'),
    ('II', 3, '[IV-II_{(d-2)/3}]', {'r': (1,)}, '[II*-II*_{(d-2)/3}]'),
    ('II', 3, '[IV*-II_{(d-1)/3}]', {'r': (2,)}, '[II-II*_{(d-1)/3}]'),
    ('II', 4, '[III-II_{(d-2)/4}]', {'r': (1,), 'q': (1,)}, '[III*-II*_{(d-2)/4}]'),
    ('II', 4, '[III*-II*_{(d-2)/4}]', {'r': (1,), 'q': (3,)}, '[III-II_{(d-2)/4}]'),
    ('II', 4, '[III-II*_{(d-2)/4}]', {'r': (3,), 'q': (1,)}, '[III*-II_{(d-2)/4}]'),
    ('II', 4, '[III*-II_{(d-2)/4}]', {'r': (3,), 'q': (3,)}, '[III-II*_{(d-2)/4}]'),
    ('II', 6, '[II*-II*_{(d-4)/6}]', {'r': (2,)}, '[IV-II_{(d-4)/6}]'),
    ('II', 6, '[II-II*_{(d-2)/6}]', {'r': (4,)}, '[IV*-II_{(d-2)/6}]'),
    ('III', 1, '[I_{d1-d2-0}]', {}, '[I*_{d1-d2-0}]'),
    ('III', 2, '[I*_{d1/2-d2/2-0}]', {'r': (0,)}, '[I_{d1/2-d2/2-0}]'),
    ('III', 2, '[2I_{d1}-0]', {'r': (1,), 'omega': 'regular'}, '[2I_{d1}-0]'),
    ('III', 2, '[II_{d1/2-d2/2}]', {'r': (1,), 'omega': 'singular'}, '[II_{d1/2-d2/2}]'),
    ('III', 4, '[III_{d1/2}]', {}, '[III_{d1/2}]'),
    ('IV', 1, '[I_{d1-d2-d3}]', {}, '[I*_{d1-d2-d3}]'),
    ('IV', 2, '[I*_{d1/2-d2/2-d3/2}]', {'r': (0,)}, '[I_{d1/2-d2/2-d3/2}]'),
    ('IV', 2, '[II*_{e1/2-e2}]', {'r': (1,), 'q': (0,)}, '[II_{e1/2-e2}]'),
    ('IV', 2, '[II_{e1/2-e2}]', {'r': (1,), 'q': (1,)}, '[II*_{e1/2-e2}]'),
    ('IV', 3, '[III_{d1}]', {}, '[III*_{d1}]'),
    ('IV', 6, '[III*_{d1/2}]', {}, '[III_{d1/2}]'),
    ('V-even', 1, '[I0-I0-d]', {}, '[I0*-I0*-(d-1)]'),
    ('V-even', 2, '[I0*-I0*-(d-2)/2]', {'d': (0,)}, '[I0-I0-d/2]'),
    ('V-even', 2, '[I0-I0*-(d-1)/2]', {'d': (1,)}, '[I0-I0*-(d-1)/2]'),
    ('V-even', 3, '[IV-IV*-(d-3)/3]', {'d': (0,)}, '[II-II*-(d-3)/3]'),
    ('V-even', 3, '[I0-IV-(d-1)/3]', {'d': (1,), 'r': (0, 1)}, '[I0*-II*-(d-4)/3]'),
    ('V-even', 3, '[IV*-IV*-(d-4)/3]', {'d': (1,), 'r': (2,)}, '[II-II-(d-1)/3]'),
    ('V-even', 3, '[I0-IV*-(d-2)/3]', {'d': (2,), 'r': (0, 2)}, '[I0*-II-(d-2)/3]'),
    ('V-even', 3, '[IV-IV-(d-2)/3]', {'d': (2,), 'r': (1,)}, '[II*-II*-(d-5)/3]'),
    ('V-even', 4, '[III-III*-(d-4)/4]', {'d': (0,)}, '[III-III*-(d-4)/4]'),
    ('V-even', 4, '[I0-III-(d-1)/4]', {'d': (1,), 'r': (0, 1)}, '[I0*-III*-(d-5)/4]'),
    ('V-even', 4, '[I0*-III*-(d-5)/4]', {'d': (1,), 'r': (2, 3)}, '[I0-III-(d-1)/4]'),
    ('V-even', 4, '[III-III-(d-2)/4]', {'d': (2,), 'r': (1,)}, '[III*-III*-(d-6)/4]'),
    ('V-even', 4, '[III*-III*-(d-6)/4]', {'d': (2,), 'r': (3,)}, '[III-III-(d-2)/4]'),
    ('V-even', 4, '[I0-III*-(d-3)/4]', {'d': (3,), 'r': (0, 3)}, '[I0*-III-(d-3)/4]'),
    ('V-even', 4, '[I0*-III-(d-3)/4]', {'d': (3,), 'r': (1, 2)}, '[I0-III*-(d-3)/4]'),
    ('V-even', 6, '[II-II*-(d-6)/6]', {'d': (0,)}, '[IV-IV*-(d-6)/6]'),
    ('V-even', 6, '[I0-II-(d-1)/6]', {'d': (1,), 'r': (0, 1)}, '[I0*-IV*-(d-7)/6]'),
    ('V-even', 6, '[II*-IV-(d-7)/6]', {'d': (1,), 'r': (2, 5)}, '[II*-IV-(d-7)/6]'),
    ('V-even', 6, '[I0*-IV*-(d-7)/6]', {'d': (1,), 'r': (3, 4)}, '[I0-II-(d-1)/6]'),
    ('V-even', 6, '[II-II-(d-2)/6]', {'d': (2,), 'r': (1,)}, '[IV*-IV*-(d-8)/6]'),
    ('V-even', 6, '[I0*-II*-(d-8)/6]', {'d': (2,), 'r': (3, 5)}, '[I0-IV-(d-2)/6]'),
    ('V-even', 6, '[II-IV-(d-3)/6]', {'d': (3,), 'r': (1, 2)}, '[II*-IV*-(d-9)/6]'),
    ('V-even', 6, '[II*-IV*-(d-9)/6]', {'d': (3,), 'r': (4, 5)}, '[II-IV-(d-3)/6]'),
    ('V-even', 6, '[I0*-II-(d-4)/6]', {'d': (4,), 'r': (1, 3)}, '[I0-IV*-(d-4)/6]'),
    ('V-even', 6, '[II*-II*-(d-10)/6]', {'d': (4,), 'r': (5,)}, '[IV-IV-(d-4)/6]'),
    ('V-even', 6, '[I0-II*-(d-5)/6]', {'d': (5,), 'r': (0, 5)}, '[I0*-IV-(d-5)/6]'),
    ('V-even', 6, '[II-IV*-(d-5)/6]', {'d': (5,), 'r': (1, 4)}, '[II-IV*-(d-5)/6]'),
    ('V-even', 6, '[I0*-IV-(d-5)/6]', {'d': (5,), 'r': (2, 3)}, '[I0-II*-(d-5)/6]'),
    ('V-even', 12, '[II*-III-(d-13)/12]', {'d': (1,), 'r': (3, 10)}, '[IV-III*-(d-13)/12]'),
    ('V-even', 12, '[IV-III*-(d-13)/12]', {'d': (1,), 'r': (4, 9)}, '[II*-III-(d-13)/12]'),
    ('V-even', 12, '[II-III-(d-5)/12]', {'d': (5,), 'r': (2, 3)}, '[IV*-III*-(d-17)/12]'),
    ('V-even', 12, '[IV*-III*-(d-17)/12]', {'d': (5,), 'r': (8, 9)}, '[II-III-(d-5)/12]'),
    ('V-even', 12, '[IV-III-(d-7)/12]', {'d': (7,), 'r': (3, 4)}, '[II*-III*-(d-19)/12]'),
    ('V-even', 12, '[II*-III*-(d-19)/12]', {'d': (7,), 'r': (9, 10)}, '[IV-III-(d-7)/12]'),
    ('V-even', 12, '[IV*-III-(d-11)/12]', {'d': (11,), 'r': (3, 8)}, '[II-III*-(d-11)/12]'),
    ('V-even', 12, '[II-III*-(d-11)/12]', {'d': (11,), 'r': (2, 9)}, '[IV*-III-(d-11)/12]'),
    ('V-odd', 2, '[2I0-r]', {}, '[2I0-r]'),
    ('V-odd', 4, '[2I0*-(r-1)/2]', {}, '[2I0*-(r-1)/2]'),
    ('V-odd', 6, '[2IV-(r-1)/3]', {'r': (1,)}, '[2IV-(r-1)/3]'),
    ('V-odd', 6, '[2IV*-(r-2)/3]', {'r': (2,)}, '[2IV*-(r-2)/3]'),
    ('V-odd', 8, '[2III-(r-1)/4]', {'r': (1,)}, '[2III-(r-1)/4]'),
    ('V-odd', 8, '[2III*-(r-3)/4]', {'r': (3,)}, '[2III*-(r-3)/4]'),
    ('V-odd', 12, '[2II-(r-1)/6]', {'r': (1,)}, '[2II-(r-1)/6]'),
    ('V-odd', 12, '[2II*-(r-5)/6]', {'r': (5,)}, '[2II*-(r-5)/6]'),
    ('VII', 1, '[I_{d1}-I_{d2}-d]', {}, '[I*_{d1}-I*_{d2}-(d-1)]'),
    ('VII', 2, '[I*_{d1/2}-I*_{d2/2}-(d-2)/2]', {'parity': 0, 'd': (0,)}, '[I_{d1/2}-I_{d2/2}-d/2]'),
    ('VII', 2, '[I_{e1/2}-I*_{e2/2}-(d-1)/2]', {'parity': 0, 'd': (1,)}, '[I_{e1/2}-I*_{e2/2}-(d-1)/2]'),
    ('VII', 2, '[2I_{d1}-d/2]', {'parity': 1}, '[2I_{d1}-d/2]'),
    ('VII', 4, '[2I*_{d1/2}-(d-2)/4]', {'parity': 1}, '[2I*_{d1/2}-(d-2)/4]'),
    ('VI', 1, '[I_{d1}-I0-d]', {}, '[I0*-I*_{d1}-(d-1)]'),
    ('VI', 2, '[I0*-I*_{d1/2}-(d-2)/2]', {'d': (0,)}, '[I_{d1/2}-I0-d/2]'),
    ('VI', 2, '[I0-I*_{d1/2}-(d-1)/2]', {'d': (1,), 'remark': True}, '[I_{d1/2}-I0*-(d-1)/2]'),
    ('VI', 2, '[I_{d1/2}-I0*-(d-1)/2]', {'d': (1,), 'remark': True}, '[I0-I*_{d1/2}-(d-1)/2]'),
    ('VI', 3, '[IV-I_{d1/3}-(d-1)/3]', {'d': (1,)}, '[II*-I*_{d1/3}-(d-4)/3]'),
    ('VI', 3, '[IV*-I_{d1/3}-(d-2)/3]', {'d': (2,)}, '[II-I*_{d1/3}-(d-2)/3]'),
    ('VI', 4, '[III-I_{d1/4}-(d-1)/4]', {'d': (1,), 'r': (0, 1)}, '[III*-I*_{d1/4}-(d-5)/4]'),
    ('VI', 4, '[III*-I*_{d1/4}-(d-5)/4]', {'d': (1,), 'r': (2, 3)}, '[III-I_{d1/4}-(d-1)/4]'),
    ('VI', 4, '[III*-I_{d1/4}-(d-3)/4]', {'d': (3,), 'r': (0, 3)}, '[III-I*_{d1/4}-(d-3)/4]'),
    ('VI', 4, '[III-I*_{d1/4}-(d-3)/4]', {'d': (3,), 'r': (1, 2)}, '[III*-I_{d1/4}-(d-3)/4]'),
    ('VI', 6, '[II-I_{d1/6}-(d-1)/6]', {'d': (1,), 'r': (0, 1)}, '[IV*-I*_{d1/6}-(d-7)/6]'),
    ('VI', 6, '[IV*-I*_{d1/6}-(d-7)/6]', {'d': (1,), 'r': (3, 4)}, '[II-I_{d1/6}-(d-1)/6]'),
    ('VI', 6, '[II*-I*_{d1/6}-(d-8)/6]', {'d': (2,)}, '[IV-I_{d1/6}-(d-2)/6]'),
    ('VI', 6, '[II-I*_{d1/6}-(d-4)/6]', {'d': (4,)}, '[IV*-I_{d1/6}-(d-4)/6]'),
    ('VI', 6, '[II*-I_{d1/6}-(d-5)/6]', {'d': (5,), 'r': (0, 5)}, '[IV-I*_{d1/6}-(d-5)/6]'),
    ('VI', 6, '[IV-I*_{d1/6}-(d-5)/6]', {'d': (5,), 'r': (2, 3)}, '[II*-I_{d1/6}-(d-5)/6]'),
]

# wild char 5: type of X -> type of the twist
CHAR5 = {
    '[IX-1]': '[VIII-3]',
    '[IX-2]': '[VIII-4]',
    '[IX-3]': '[VIII-1]',
    '[IX-4]': '[VIII-2]',
    '[VIII-1]': '[IX-3]',
    '[VIII-2]': '[IX-4]',
    '[VIII-3]': '[IX-1]',
    '[VIII-4]': '[IX-2]',
}
