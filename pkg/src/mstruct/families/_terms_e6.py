"""Sandwich terms of the E6 operator as (coefficient, left word, right word)."""

TERMS = (
    ('-1 + lambda^3', ('e[1]',), ('f[1,2,2]',)),
    ('-1 + lambda^3', ('e[1]',), ('f[2,1,1]',)),
    ('-1 + lambda^3', ('e[1]',), ('f[2,2,2]',)),
    ('-1 + lambda^3', ('e[1]',), ('f[3,1,1]',)),
    ('-1 + lambda^3', ('e[2]',), ('f[2,2,2]',)),
    ('-1 + lambda^3', ('e[2]',), ('f[3,1,1]',)),
    ('-1 + lambda^3', ('e[M,1,1]',), ('f[2,2,2]',)),
    ('-1 + lambda^3', ('e[M,1,1]',), ('f[3,1,1]',)),
    ('-1 + lambda^3', ('e[M,3,3]',), ('f[1,2,2]',)),
    ('-1 + lambda^3', ('e[M,3,3]',), ('f[2,1,1]',)),
    ('-1 + lambda^3', ('e[M,3,3]',), ('f[2,2,2]',)),
    ('-1 + lambda^3', ('e[M,3,3]',), ('f[3,1,1]',)),
    ('lambda^3', ('e[M,1,1]',), ('f[1,2,2]',)),
    ('lambda^3', ('e[M,1,1]',), ('f[2,1,1]',)),
    ('lambda^3', ('e[M,2,2]',), ('f[2,2,2]',)),
    ('lambda^3', ('e[M,2,2]',), ('f[3,1,1]',)),
    ('lambda^3', ('e[M,3,3]',), ('f[1,1,1]',)),
    ('lambda^3', ('e[M,3,3]',), ('f[3,2,2]',)),
    ('lambda^2', ('e[M,1,1]',), ('f[1,1,2]',)),
    ('lambda^2', ('e[M,2,2]',), ('f[2,1,2]',)),
    ('lambda^2', ('e[M,3,3]',), ('f[3,1,2]',)),
    ('-lambda^2', ('e[M,1,2]',), ('f[1,2,2]',)),
    ('-lambda^2', ('e[M,1,3]',), ('f[2,2,1]',)),
    ('-lambda^2', ('e[M,2,1]',), ('f[3,2,1]',)),
    ('-lambda^2', ('e[M,2,3]',), ('f[2,2,2]',)),
    ('-lambda^2', ('e[M,3,1]',), ('f[3,2,2]',)),
    ('-lambda^2', ('e[M,3,2]',), ('f[1,2,1]',)),
    ('lambda', ('e[M,1,1]',), ('f[2,2,1]',)),
    ('lambda', ('e[M,2,2]',), ('f[3,2,1]',)),
    ('lambda', ('e[M,3,3]',), ('f[1,2,1]',)),
    ('-lambda', ('e[M,1,2]',), ('f[1,1,2]',)),
    ('-lambda', ('e[M,1,3]',), ('f[2,1,1]',)),
    ('-lambda', ('e[M,2,1]',), ('f[3,1,1]',)),
    ('-lambda', ('e[M,2,3]',), ('f[2,1,2]',)),
    ('-lambda', ('e[M,3,1]',), ('f[3,1,2]',)),
    ('-lambda', ('e[M,3,2]',), ('f[1,1,1]',)),
    ('-1 + lambda^3', ('f[3,2,2]', 'e[3]'), ()),
)
