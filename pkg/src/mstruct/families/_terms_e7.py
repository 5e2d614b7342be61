"""Sandwich terms of the E7 operator as (coefficient, left word, right word)."""

TERMS = (
    ('-lambda + lambda^2', ('e[2,1,2]',), ('f[2,4,1]',)),
    ('-lambda + lambda^2', ('e[2,3,2]',), ('f[2,4,3]',)),
    ('-lambda + lambda^2', ('e[2,2,2]',), ('f[2,4,2]',)),
    ('lambda - lambda^2', ('e[4,3,1]',), ('f[2,4,4]',)),
    ('1 + lambda', ('e[5]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[3,2,2]',), ('f[1,1,1]',)),
    ('1 + lambda', ('e[5]',), ('f[1,1,1]',)),
    ('1 + lambda', ('e[2,2,2]',), ('f[1,1,1]',)),
    ('1 + lambda', ('e[5]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[3,2,2]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[1,1,1]',)),
    ('1 + lambda', ('e[2,2,2]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[3,2,2]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[2,2,2]',), ('f[3,2,2]',)),
    ('-1 + lambda', ('e[4,1,2]',), ('f[2,3,2]',)),
    ('-1 + lambda', ('e[4,2,2]',), ('f[2,3,1]',)),
    ('-1 + lambda', ('e[4,3,2]',), ('f[2,3,4]',)),
    ('1 - lambda', ('e[2,3,1]',), ('f[2,3,3]',)),
    ('lambda', ('e[2,2,2]',), ('f[1,1,2]',)),
    ('-lambda', ('e[2,2,3]',), ('f[1,1,2]',)),
    ('lambda', ('e[2,1,1]',), ('f[1,1,1]',)),
    ('lambda', ('e[4,1,1]',), ('f[2,1,2]',)),
    ('lambda', ('e[4,1,2]',), ('f[2,1,2]',)),
    ('lambda', ('e[5]',), ('f[2,1,2]',)),
    ('lambda', ('e[4,3,1]',), ('f[2,1,4]',)),
    ('lambda', ('e[4,3,2]',), ('f[2,1,4]',)),
    ('lambda', ('e[4,1,1]',), ('f[1,1,2]',)),
    ('lambda', ('e[4,1,2]',), ('f[1,1,2]',)),
    ('lambda', ('e[2,2,2]',), ('f[3,1,1]',)),
    ('lambda', ('e[2,2,2]',), ('f[2,2,2]',)),
    ('-lambda', ('e[4,3,1]',), ('f[2,2,4]',)),
    ('lambda', ('e[5]',), ('f[1,1,2]',)),
    ('lambda', ('e[4,1,1]',), ('f[3,1,1]',)),
    ('-lambda', ('e[2,1,3]',), ('f[1,1,1]',)),
    ('-lambda', ('e[3,1,2]',), ('f[1,1,1]',)),
    ('lambda', ('e[4,3,3]',), ('f[2,1,1]',)),
    ('lambda', ('e[4,2,2]',), ('f[1,1,1]',)),
    ('lambda', ('e[4,3,3]',), ('f[1,1,1]',)),
    ('lambda', ('e[2,3,2]',), ('f[2,2,3]',)),
    ('-lambda', ('e[2,1,2]',), ('f[2,1,1]',)),
    ('lambda', ('e[5]',), ('f[3,2,1]',)),
    ('-lambda', ('e[2,3,1]',), ('f[2,1,3]',)),
    ('-lambda', ('e[3,1,2]',), ('f[2,1,1]',)),
    ('-lambda', ('e[2,3,2]',), ('f[2,1,3]',)),
    ('lambda', ('e[2,3,3]',), ('f[2,1,3]',)),
    ('lambda', ('e[2,1,2]',), ('f[3,1,2]',)),
    ('lambda', ('e[4,2,2]',), ('f[2,1,1]',)),
    ('lambda', ('e[2,2,2]',), ('f[2,3,3]',)),
    ('lambda', ('e[2,3,3]',), ('f[2,3,3]',)),
    ('lambda', ('e[2,1,2]',), ('f[2,2,1]',)),
    ('lambda', ('e[3,2,2]',), ('f[2,3,3]',)),
    ('lambda', ('e[4,1,1]',), ('f[2,3,3]',)),
    ('-lambda', ('e[2,1,2]',), ('f[3,2,2]',)),
    ('lambda', ('e[4,3,3]',), ('f[2,4,4]',)),
    ('lambda', ('e[2,2,1]',), ('f[1,1,2]',)),
    ('lambda', ('e[4,2,1]',), ('f[3,1,2]',)),
    ('-lambda', ('e[3,1,2]',), ('f[3,2,2]',)),
    ('-lambda', ('e[4,2,1]',), ('f[3,2,2]',)),
    ('lambda', ('e[4,3,3]',), ('f[2,3,3]',)),
    ('lambda', ('e[5]',), ('f[2,3,3]',)),
    ('lambda', ('e[4,3,3]',), ('f[3,2,2]',)),
    ('1', ('e[2,2,1]',), ('f[2,1,1]',)),
    ('-1', ('e[2,1,1]',), ('f[1,2,1]',)),
    ('-1', ('e[2,2,2]',), ('f[1,2,1]',)),
    ('1', ('e[2,3,3]',), ('f[2,1,1]',)),
    ('1', ('e[3,2,1]',), ('f[2,1,1]',)),
    ('1', ('e[4,1,2]',), ('f[2,1,1]',)),
    ('-1', ('e[2,2,2]',), ('f[3,1,2]',)),
    ('-1', ('e[2,2,2]',), ('f[2,2,1]',)),
    ('-1', ('e[2,3,3]',), ('f[3,1,2]',)),
    ('-1', ('e[3,1,1]',), ('f[3,1,2]',)),
    ('-1', ('e[3,2,2]',), ('f[3,1,2]',)),
    ('-1', ('e[4,1,1]',), ('f[3,1,2]',)),
    ('1', ('e[2,2,1]',), ('f[2,3,3]',)),
    ('1', ('e[3,2,1]',), ('f[2,3,3]',)),
    ('-1', ('e[2,3,3]',), ('f[1,2,1]',)),
    ('-1', ('e[3,1,1]',), ('f[1,2,1]',)),
    ('-1', ('e[3,2,2]',), ('f[1,2,1]',)),
    ('-1', ('e[4,1,1]',), ('f[1,2,1]',)),
    ('-1', ('e[2,3,3]',), ('f[2,2,1]',)),
    ('-1', ('e[3,1,1]',), ('f[2,2,1]',)),
    ('-1', ('e[3,2,2]',), ('f[2,2,1]',)),
    ('-1', ('e[4,1,1]',), ('f[2,2,1]',)),
    ('-1', ('e[4,2,3]',), ('f[3,1,2]',)),
    ('-1', ('e[4,3,3]',), ('f[3,1,2]',)),
    ('-1', ('e[5]',), ('f[3,1,2]',)),
    ('1', ('e[2,2,1]',), ('f[3,2,2]',)),
    ('1', ('e[5]',), ('f[2,4,4]',)),
    ('1', ('e[2,2,1]',), ('f[3,1,1]',)),
    ('-1', ('e[4,2,2]',), ('f[2,2,1]',)),
    ('-1', ('e[4,3,3]',), ('f[2,2,1]',)),
    ('-1', ('e[5]',), ('f[2,2,1]',)),
    ('-1', ('e[4,2,2]',), ('f[1,2,1]',)),
    ('-1', ('e[4,3,3]',), ('f[1,2,1]',)),
    ('-1', ('e[5]',), ('f[1,2,1]',)),
    ('1', ('e[4,1,2]',), ('f[2,3,3]',)),
    ('1', ('e[2,3,3]',), ('f[3,2,2]',)),
    ('1', ('e[3,2,1]',), ('f[3,2,2]',)),
    ('1', ('e[4,1,2]',), ('f[3,2,2]',)),
    ('1', ('e[2,3,3]',), ('f[2,4,4]',)),
    ('1', ('e[3,2,1]',), ('f[2,4,4]',)),
    ('1', ('e[3,2,2]',), ('f[2,4,4]',)),
    ('1', ('e[4,1,1]',), ('f[2,4,4]',)),
    ('1', ('e[4,1,2]',), ('f[2,4,4]',)),
    ('1', ('e[4,1,2]',), ('f[3,1,1]',)),
    ('-1', ('e[4,1,3]',), ('f[3,1,1]',)),
    ('1', ('e[2,2,1]',), ('f[2,2,2]',)),
    ('1', ('e[2,2,1]',), ('f[1,1,1]',)),
    ('1', ('e[2,3,3]',), ('f[1,1,1]',)),
    ('-1', ('e[4,3,2]',), ('f[2,2,4]',)),
    ('1', ('e[4,3,3]',), ('f[2,2,4]',)),
    ('1', ('e[2,2,1]',), ('f[2,4,4]',)),
    ('1', ('e[2,2,2]',), ('f[2,4,4]',)),
    ('1', ('e[2,3,1]',), ('f[2,2,3]',)),
    ('1', ('e[3,2,1]',), ('f[1,1,1]',)),
    ('1', ('e[4,1,2]',), ('f[1,1,1]',)),
    ('1', ('f[1,2,1]', 'e[1]'), ()),
)
