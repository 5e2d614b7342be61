"""Sandwich terms of the E8 operator as (coefficient, left word, right word)."""

TERMS = (
    ('1 + lambda', ('e[2,1,1]',), ('f[1,3,3]',)),
    ('1 + lambda', ('e[3,1,1]',), ('f[1,3,3]',)),
    ('1 + lambda', ('e[2,6,6]',), ('f[1,3,3]',)),
    ('1 + lambda', ('e[2,3,3]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[2,1,1]',), ('f[3,4,4]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[1,3,3]',)),
    ('1 + lambda', ('e[2,1,1]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[1,1,1]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[3,1,1]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[2,6,6]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[1,1,1]',), ('f[3,4,4]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[3,4,4]',)),
    ('1 + lambda', ('e[3,3,3]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[2,1,1]',)),
    ('1 + lambda', ('e[2,6,6]',), ('f[3,4,4]',)),
    ('1 + lambda', ('e[3,1,1]',), ('f[3,5,5]',)),
    ('1 + lambda', ('e[3,1,1]',), ('f[3,4,4]',)),
    ('1 + lambda', ('e[2,3,3]',), ('f[3,5,5]',)),
    ('1 + lambda', ('e[1,1,1]',), ('f[3,5,5]',)),
    ('1 + lambda', ('e[2,1,1]',), ('f[3,5,5]',)),
    ('1 + lambda', ('e[3,3,3]',), ('f[3,5,5]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[3,5,5]',)),
    ('1 + lambda', ('e[2,6,6]',), ('f[1,2,2]',)),
    ('1 + lambda', ('e[3,3,3]',), ('f[1,2,2]',)),
    ('1 + lambda', ('e[1,1,1]',), ('f[1,2,2]',)),
    ('1 + lambda', ('e[2,1,1]',), ('f[1,2,2]',)),
    ('1 + lambda', ('e[3,1,1]',), ('f[1,2,2]',)),
    ('1 + lambda', ('e[2,3,3]',), ('f[1,2,2]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[1,2,2]',)),
    ('1 + lambda', ('e[2,1,1]',), ('f[4,2,2]',)),
    ('1 + lambda', ('e[1,1,1]',), ('f[4,2,2]',)),
    ('1 + lambda', ('e[1,1,1]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[2,1,1]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[2,6,6]',), ('f[4,2,2]',)),
    ('1 + lambda', ('e[3,1,1]',), ('f[4,2,2]',)),
    ('1 + lambda', ('e[2,3,3]',), ('f[4,2,2]',)),
    ('1 + lambda', ('e[1,1,1]',), ('f[1,3,3]',)),
    ('1 + lambda', ('e[3,1,1]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[2,6,6]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[2,3,3]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[3,3,3]',), ('f[4,2,2]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[4,2,2]',)),
    ('1 + lambda', ('e[3,3,3]',), ('f[3,2,2]',)),
    ('1 + lambda', ('e[4,1,1]',), ('f[3,2,2]',)),
    ('-1 + lambda', ('e[2,3,1]',), ('f[4,3,3]',)),
    ('1 - lambda', ('e[2,4,4]',), ('f[1,2,3]',)),
    ('1 - lambda', ('e[3,4,4]',), ('f[1,2,3]',)),
    ('-1 + lambda', ('e[3,3,4]',), ('f[4,2,3]',)),
    ('-1 + lambda', ('e[3,3,1]',), ('f[4,3,3]',)),
    ('-1 + lambda', ('e[2,1,4]',), ('f[3,2,1]',)),
    ('-1 + lambda', ('e[2,1,4]',), ('f[4,2,1]',)),
    ('1 - lambda', ('e[3,4,4]',), ('f[3,2,4]',)),
    ('1 - lambda', ('e[2,6,4]',), ('f[1,2,4]',)),
    ('1 - lambda', ('e[3,4,1]',), ('f[3,3,4]',)),
    ('1 - lambda', ('e[3,2,1]',), ('f[3,3,2]',)),
    ('-1 + lambda', ('e[2,3,1]',), ('f[3,3,3]',)),
    ('-1 + lambda', ('e[2,5,4]',), ('f[3,2,5]',)),
    ('-1 + lambda', ('e[2,5,1]',), ('f[3,3,5]',)),
    ('1 - lambda', ('e[4,1,1]',), ('f[3,3,1]',)),
    ('1 - lambda', ('e[4,2,1]',), ('f[3,3,2]',)),
    ('-1 + lambda', ('e[3,1,4]',), ('f[4,2,1]',)),
    ('1 - lambda', ('e[3,1,1]',), ('f[3,3,1]',)),
    ('-1 + lambda', ('e[2,3,4]',), ('f[4,2,3]',)),
    ('-1 + lambda', ('e[3,2,4]',), ('f[4,2,2]',)),
    ('-1 + lambda', ('e[2,2,4]',), ('f[3,2,2]',)),
    ('1 - lambda', ('e[4,1,1]',), ('f[4,3,1]',)),
    ('-1 + lambda', ('e[2,2,4]',), ('f[4,2,2]',)),
    ('-1 + lambda', ('e[2,3,4]',), ('f[3,2,3]',)),
    ('1 - lambda', ('e[4,2,1]',), ('f[4,3,2]',)),
    ('lambda', ('e[1,1,1]',), ('f[1,4,1]',)),
    ('lambda', ('e[3,4,3]',), ('f[1,1,3]',)),
    ('-lambda', ('e[3,4,2]',), ('f[1,1,3]',)),
    ('lambda', ('e[3,4,1]',), ('f[1,1,3]',)),
    ('-lambda', ('e[2,4,2]',), ('f[1,2,3]',)),
    ('lambda', ('e[2,1,1]',), ('f[1,1,1]',)),
    ('lambda', ('e[1,1,1]',), ('f[1,1,2]',)),
    ('lambda', ('e[3,1,3]',), ('f[1,1,1]',)),
    ('-lambda', ('e[2,4,5]',), ('f[1,2,3]',)),
    ('-lambda', ('e[2,1,2]',), ('f[1,1,1]',)),
    ('-lambda', ('e[3,4,2]',), ('f[1,2,3]',)),
    ('lambda', ('e[2,4,2]',), ('f[1,3,3]',)),
    ('-lambda', ('e[2,1,2]',), ('f[1,3,3]',)),
    ('lambda', ('e[2,1,3]',), ('f[1,1,1]',)),
    ('-lambda', ('e[1,1,2]',), ('f[1,3,3]',)),
    ('-lambda', ('e[2,6,4]',), ('f[1,3,3]',)),
    ('lambda', ('e[2,4,4]',), ('f[1,3,3]',)),
    ('lambda', ('e[3,3,2]',), ('f[4,2,3]',)),
    ('lambda', ('e[2,3,3]',), ('f[1,3,3]',)),
    ('lambda', ('e[2,3,5]',), ('f[3,1,3]',)),
    ('lambda', ('e[2,5,5]',), ('f[1,3,3]',)),
    ('lambda', ('e[3,4,4]',), ('f[1,3,3]',)),
    ('lambda', ('e[3,3,3]',), ('f[1,3,3]',)),
    ('lambda', ('e[3,4,2]',), ('f[1,3,3]',)),
    ('-lambda', ('e[3,1,2]',), ('f[1,3,3]',)),
    ('lambda', ('e[2,1,1]',), ('f[1,4,3]',)),
    ('lambda', ('e[1,2,1]',), ('f[1,4,3]',)),
    ('lambda', ('e[1,1,1]',), ('f[1,4,3]',)),
    ('-lambda', ('e[4,1,2]',), ('f[1,3,3]',)),
    ('lambda', ('e[2,4,2]',), ('f[1,4,3]',)),
    ('-lambda', ('e[2,4,1]',), ('f[1,4,3]',)),
    ('lambda', ('e[2,2,1]',), ('f[1,4,3]',)),
    ('-lambda', ('e[1,1,2]',), ('f[4,3,3]',)),
    ('lambda', ('e[3,1,1]',), ('f[1,4,3]',)),
    ('lambda', ('e[2,6,6]',), ('f[1,4,3]',)),
    ('-lambda', ('e[2,1,2]',), ('f[4,3,3]',)),
    ('lambda', ('e[2,5,5]',), ('f[1,4,3]',)),
    ('lambda', ('e[2,3,5]',), ('f[1,4,3]',)),
    ('lambda', ('e[2,4,4]',), ('f[1,4,3]',)),
    ('lambda', ('e[2,3,3]',), ('f[4,3,3]',)),
    ('lambda', ('e[3,2,1]',), ('f[1,4,3]',)),
    ('-lambda', ('e[2,1,5]',), ('f[1,1,1]',)),
    ('lambda', ('e[3,4,2]',), ('f[1,4,3]',)),
    ('-lambda', ('e[3,4,1]',), ('f[1,4,3]',)),
    ('lambda', ('e[3,4,1]',), ('f[3,1,4]',)),
    ('lambda', ('e[3,1,3]',), ('f[3,1,1]',)),
    ('lambda', ('e[4,2,1]',), ('f[1,4,3]',)),
    ('-lambda', ('e[2,3,5]',), ('f[4,3,3]',)),
    ('lambda', ('e[4,1,1]',), ('f[1,4,3]',)),
    ('lambda', ('e[3,4,4]',), ('f[1,4,3]',)),
    ('-lambda', ('e[2,6,4]',), ('f[4,3,3]',)),
    ('-lambda', ('e[2,6,2]',), ('f[1,1,4]',)),
    ('lambda', ('e[3,4,3]',), ('f[3,1,4]',)),
    ('-lambda', ('e[3,4,2]',), ('f[3,1,4]',)),
    ('lambda', ('e[3,1,1]',), ('f[1,1,1]',)),
    ('lambda', ('e[2,6,1]',), ('f[1,1,4]',)),
    ('lambda', ('e[3,1,1]',), ('f[3,3,5]',)),
    ('lambda', ('e[2,6,3]',), ('f[1,1,4]',)),
    ('-lambda', ('e[3,1,2]',), ('f[4,3,3]',)),
    ('-lambda', ('e[3,1,2]',), ('f[1,1,1]',)),
    ('-lambda', ('e[2,6,5]',), ('f[1,1,4]',)),
    ('lambda', ('e[3,3,3]',), ('f[4,3,3]',)),
    ('lambda', ('e[3,1,2]',), ('f[4,2,1]',)),
    ('-lambda', ('e[2,6,2]',), ('f[1,2,4]',)),
    ('-lambda', ('e[2,6,5]',), ('f[1,2,4]',)),
    ('-lambda', ('e[2,2,2]',), ('f[3,4,2]',)),
    ('lambda', ('e[4,1,1]',), ('f[1,1,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[1,1,1]',)),
    ('lambda', ('e[1,1,2]',), ('f[1,2,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[4,3,3]',)),
    ('-lambda', ('e[3,4,2]',), ('f[3,2,4]',)),
    ('lambda', ('e[2,6,2]',), ('f[1,3,4]',)),
    ('lambda', ('e[2,6,4]',), ('f[1,3,4]',)),
    ('lambda', ('e[2,1,1]',), ('f[1,4,4]',)),
    ('-lambda', ('e[1,1,2]',), ('f[1,4,4]',)),
    ('lambda', ('e[1,1,1]',), ('f[1,4,4]',)),
    ('-lambda', ('e[2,2,4]',), ('f[3,4,2]',)),
    ('lambda', ('e[2,3,3]',), ('f[1,4,4]',)),
    ('lambda', ('e[2,6,2]',), ('f[1,4,4]',)),
    ('-lambda', ('e[2,1,2]',), ('f[1,4,4]',)),
    ('-lambda', ('e[2,6,1]',), ('f[1,4,4]',)),
    ('-lambda', ('e[2,3,5]',), ('f[1,4,4]',)),
    ('-lambda', ('e[3,1,2]',), ('f[1,4,4]',)),
    ('lambda', ('e[3,1,1]',), ('f[1,4,4]',)),
    ('lambda', ('e[2,3,5]',), ('f[1,2,1]',)),
    ('lambda', ('e[4,1,1]',), ('f[1,4,4]',)),
    ('-lambda', ('e[2,1,5]',), ('f[1,2,1]',)),
    ('lambda', ('e[3,3,3]',), ('f[1,4,4]',)),
    ('lambda', ('e[2,3,2]',), ('f[3,2,3]',)),
    ('-lambda', ('e[2,1,2]',), ('f[2,1,1]',)),
    ('-lambda', ('e[1,1,2]',), ('f[2,1,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[1,4,4]',)),
    ('lambda', ('e[2,5,5]',), ('f[2,1,1]',)),
    ('-lambda', ('e[2,3,5]',), ('f[2,1,1]',)),
    ('-lambda', ('e[2,6,4]',), ('f[2,1,1]',)),
    ('-lambda', ('e[3,4,3]',), ('f[3,3,4]',)),
    ('-lambda', ('e[1,1,2]',), ('f[3,4,4]',)),
    ('-lambda', ('e[3,1,2]',), ('f[2,1,1]',)),
    ('lambda', ('e[2,3,3]',), ('f[3,4,4]',)),
    ('lambda', ('e[2,1,1]',), ('f[2,2,1]',)),
    ('lambda', ('e[1,1,1]',), ('f[2,2,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[2,1,1]',)),
    ('-lambda', ('e[2,1,2]',), ('f[3,4,4]',)),
    ('lambda', ('e[2,5,5]',), ('f[3,4,4]',)),
    ('lambda', ('e[2,4,4]',), ('f[2,2,1]',)),
    ('lambda', ('e[2,3,3]',), ('f[2,2,1]',)),
    ('-lambda', ('e[2,6,4]',), ('f[3,4,4]',)),
    ('-lambda', ('e[3,1,2]',), ('f[3,4,4]',)),
    ('lambda', ('e[3,1,1]',), ('f[2,2,1]',)),
    ('lambda', ('e[2,6,6]',), ('f[2,2,1]',)),
    ('lambda', ('e[2,5,5]',), ('f[2,2,1]',)),
    ('lambda', ('e[3,3,3]',), ('f[2,2,1]',)),
    ('lambda', ('e[3,4,4]',), ('f[3,4,4]',)),
    ('lambda', ('e[2,3,5]',), ('f[4,1,3]',)),
    ('lambda', ('e[3,3,3]',), ('f[3,4,4]',)),
    ('lambda', ('e[3,4,2]',), ('f[3,4,4]',)),
    ('lambda', ('e[1,2,1]',), ('f[2,3,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[3,4,4]',)),
    ('lambda', ('e[1,1,1]',), ('f[2,3,1]',)),
    ('lambda', ('e[4,1,1]',), ('f[2,2,1]',)),
    ('lambda', ('e[3,4,4]',), ('f[2,2,1]',)),
    ('lambda', ('e[2,5,5]',), ('f[2,3,1]',)),
    ('lambda', ('e[2,4,4]',), ('f[2,3,1]',)),
    ('lambda', ('e[2,3,3]',), ('f[2,3,1]',)),
    ('-lambda', ('e[1,1,2]',), ('f[1,3,1]',)),
    ('lambda', ('e[2,2,1]',), ('f[2,3,1]',)),
    ('lambda', ('e[2,1,1]',), ('f[2,3,1]',)),
    ('lambda', ('e[3,3,3]',), ('f[2,3,1]',)),
    ('lambda', ('e[3,2,1]',), ('f[2,3,1]',)),
    ('lambda', ('e[3,1,1]',), ('f[2,3,1]',)),
    ('lambda', ('e[2,6,6]',), ('f[2,3,1]',)),
    ('lambda', ('e[2,3,5]',), ('f[3,2,3]',)),
    ('lambda', ('e[4,2,1]',), ('f[2,3,1]',)),
    ('lambda', ('e[4,1,1]',), ('f[2,3,1]',)),
    ('lambda', ('e[3,4,4]',), ('f[2,3,1]',)),
    ('lambda', ('e[2,3,5]',), ('f[2,1,2]',)),
    ('-lambda', ('e[2,1,2]',), ('f[2,2,2]',)),
    ('-lambda', ('e[1,1,2]',), ('f[2,2,2]',)),
    ('lambda', ('e[2,5,2]',), ('f[3,1,5]',)),
    ('-lambda', ('e[2,6,4]',), ('f[2,2,2]',)),
    ('-lambda', ('e[2,5,1]',), ('f[3,1,5]',)),
    ('-lambda', ('e[2,5,3]',), ('f[3,1,5]',)),
    ('-lambda', ('e[3,1,2]',), ('f[2,2,2]',)),
    ('-lambda', ('e[4,1,2]',), ('f[2,2,2]',)),
    ('lambda', ('e[2,5,5]',), ('f[3,1,5]',)),
    ('-lambda', ('e[2,3,3]',), ('f[2,3,2]',)),
    ('lambda', ('e[2,3,5]',), ('f[2,3,2]',)),
    ('-lambda', ('e[3,3,3]',), ('f[2,3,2]',)),
    ('-lambda', ('e[1,1,2]',), ('f[1,4,1]',)),
    ('lambda', ('e[2,5,2]',), ('f[3,2,5]',)),
    ('lambda', ('e[2,5,5]',), ('f[3,2,5]',)),
    ('-lambda', ('e[3,3,1]',), ('f[4,1,3]',)),
    ('lambda', ('e[2,6,4]',), ('f[2,2,3]',)),
    ('-lambda', ('e[1,1,2]',), ('f[3,3,3]',)),
    ('lambda', ('e[2,1,1]',), ('f[3,3,5]',)),
    ('lambda', ('e[1,1,1]',), ('f[3,3,5]',)),
    ('lambda', ('e[3,3,2]',), ('f[4,1,3]',)),
    ('-lambda', ('e[2,1,2]',), ('f[2,3,3]',)),
    ('lambda', ('e[2,4,4]',), ('f[3,3,5]',)),
    ('lambda', ('e[2,1,1]',), ('f[2,3,3]',)),
    ('-lambda', ('e[1,1,2]',), ('f[2,3,3]',)),
    ('lambda', ('e[2,5,3]',), ('f[3,3,5]',)),
    ('lambda', ('e[1,1,1]',), ('f[2,3,3]',)),
    ('lambda', ('e[2,3,3]',), ('f[3,3,5]',)),
    ('-lambda', ('e[2,1,2]',), ('f[3,3,3]',)),
    ('lambda', ('e[2,3,3]',), ('f[2,3,3]',)),
    ('-lambda', ('e[3,1,2]',), ('f[2,3,3]',)),
    ('lambda', ('e[3,1,1]',), ('f[2,3,3]',)),
    ('-lambda', ('e[2,3,5]',), ('f[2,3,3]',)),
    ('lambda', ('e[3,3,3]',), ('f[3,3,5]',)),
    ('lambda', ('e[4,1,1]',), ('f[2,3,3]',)),
    ('lambda', ('e[3,3,3]',), ('f[2,3,3]',)),
    ('lambda', ('e[4,1,1]',), ('f[3,3,5]',)),
    ('lambda', ('e[3,4,4]',), ('f[3,3,5]',)),
    ('-lambda', ('e[4,1,2]',), ('f[2,3,3]',)),
    ('lambda', ('e[1,2,2]',), ('f[1,1,2]',)),
    ('lambda', ('e[2,2,1]',), ('f[1,1,2]',)),
    ('lambda', ('e[2,1,1]',), ('f[1,1,2]',)),
    ('-lambda', ('e[2,5,2]',), ('f[3,4,5]',)),
    ('-lambda', ('e[3,3,3]',), ('f[4,1,3]',)),
    ('-lambda', ('e[2,5,4]',), ('f[3,4,5]',)),
    ('lambda', ('e[3,1,1]',), ('f[3,1,1]',)),
    ('lambda', ('e[2,3,3]',), ('f[3,3,3]',)),
    ('-lambda', ('e[3,1,2]',), ('f[3,1,1]',)),
    ('lambda', ('e[2,3,3]',), ('f[1,1,2]',)),
    ('lambda', ('e[2,2,3]',), ('f[1,1,2]',)),
    ('lambda', ('e[4,1,1]',), ('f[3,1,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[3,1,1]',)),
    ('lambda', ('e[1,1,2]',), ('f[3,2,1]',)),
    ('-lambda', ('e[1,1,2]',), ('f[3,5,5]',)),
    ('lambda', ('e[2,4,4]',), ('f[1,1,2]',)),
    ('lambda', ('e[2,1,2]',), ('f[3,2,1]',)),
    ('-lambda', ('e[2,2,5]',), ('f[1,1,2]',)),
    ('-lambda', ('e[2,1,2]',), ('f[3,5,5]',)),
    ('-lambda', ('e[2,6,4]',), ('f[3,3,3]',)),
    ('lambda', ('e[2,5,5]',), ('f[1,1,2]',)),
    ('lambda', ('e[2,3,5]',), ('f[3,2,1]',)),
    ('-lambda', ('e[2,3,5]',), ('f[3,3,3]',)),
    ('-lambda', ('e[2,3,5]',), ('f[3,5,5]',)),
    ('lambda', ('e[2,6,6]',), ('f[1,1,2]',)),
    ('lambda', ('e[3,1,1]',), ('f[1,1,2]',)),
    ('lambda', ('e[3,2,1]',), ('f[1,1,2]',)),
    ('-lambda', ('e[3,1,2]',), ('f[3,5,5]',)),
    ('lambda', ('e[3,2,3]',), ('f[1,1,2]',)),
    ('lambda', ('e[3,3,3]',), ('f[1,1,2]',)),
    ('-lambda', ('e[4,1,2]',), ('f[3,5,5]',)),
    ('-lambda', ('e[3,2,3]',), ('f[3,3,2]',)),
    ('lambda', ('e[3,4,4]',), ('f[1,1,2]',)),
    ('lambda', ('e[4,1,1]',), ('f[1,1,2]',)),
    ('lambda', ('e[4,2,1]',), ('f[1,1,2]',)),
    ('-lambda', ('e[1,1,2]',), ('f[1,2,2]',)),
    ('lambda', ('e[1,2,2]',), ('f[1,2,2]',)),
    ('-lambda', ('e[3,1,2]',), ('f[3,3,3]',)),
    ('-lambda', ('e[3,1,3]',), ('f[3,3,1]',)),
    ('-lambda', ('e[2,1,2]',), ('f[1,2,2]',)),
    ('-lambda', ('e[1,1,2]',), ('f[3,4,1]',)),
    ('-lambda', ('e[2,1,2]',), ('f[3,4,1]',)),
    ('-lambda', ('e[2,6,4]',), ('f[1,2,2]',)),
    ('lambda', ('e[4,1,1]',), ('f[4,1,1]',)),
    ('-lambda', ('e[2,2,5]',), ('f[1,2,2]',)),
    ('-lambda', ('e[2,1,4]',), ('f[3,4,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[4,1,1]',)),
    ('-lambda', ('e[2,3,5]',), ('f[1,2,2]',)),
    ('lambda', ('e[2,5,5]',), ('f[1,2,2]',)),
    ('lambda', ('e[1,1,2]',), ('f[4,2,1]',)),
    ('lambda', ('e[2,1,2]',), ('f[4,2,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[3,3,3]',)),
    ('-lambda', ('e[3,1,2]',), ('f[1,2,2]',)),
    ('lambda', ('e[2,3,5]',), ('f[4,2,1]',)),
    ('-lambda', ('e[4,1,2]',), ('f[1,2,2]',)),
    ('-lambda', ('e[1,2,2]',), ('f[1,3,2]',)),
    ('lambda', ('e[1,1,1]',), ('f[3,1,2]',)),
    ('lambda', ('e[2,1,1]',), ('f[3,1,2]',)),
    ('lambda', ('e[1,2,2]',), ('f[3,1,2]',)),
    ('lambda', ('e[1,1,1]',), ('f[4,1,2]',)),
    ('lambda', ('e[2,1,1]',), ('f[4,1,2]',)),
    ('lambda', ('e[1,2,2]',), ('f[4,1,2]',)),
    ('lambda', ('e[2,2,2]',), ('f[3,1,2]',)),
    ('lambda', ('e[2,2,2]',), ('f[4,1,2]',)),
    ('-lambda', ('e[2,3,2]',), ('f[3,4,3]',)),
    ('lambda', ('e[2,3,3]',), ('f[3,1,2]',)),
    ('lambda', ('e[2,3,3]',), ('f[4,1,2]',)),
    ('lambda', ('e[2,4,4]',), ('f[3,1,2]',)),
    ('lambda', ('e[2,4,4]',), ('f[4,1,2]',)),
    ('lambda', ('e[2,5,5]',), ('f[4,1,2]',)),
    ('lambda', ('e[2,5,5]',), ('f[3,1,2]',)),
    ('lambda', ('e[3,1,1]',), ('f[4,1,2]',)),
    ('lambda', ('e[2,6,6]',), ('f[4,1,2]',)),
    ('lambda', ('e[3,2,2]',), ('f[4,1,2]',)),
    ('lambda', ('e[3,1,1]',), ('f[3,1,2]',)),
    ('lambda', ('e[2,6,6]',), ('f[3,1,2]',)),
    ('lambda', ('e[3,2,1]',), ('f[3,1,2]',)),
    ('lambda', ('e[3,3,3]',), ('f[4,1,2]',)),
    ('lambda', ('e[3,4,4]',), ('f[4,1,2]',)),
    ('lambda', ('e[4,1,1]',), ('f[4,1,2]',)),
    ('lambda', ('e[3,2,3]',), ('f[3,1,2]',)),
    ('lambda', ('e[4,2,1]',), ('f[4,1,2]',)),
    ('lambda', ('e[3,3,3]',), ('f[3,1,2]',)),
    ('lambda', ('e[4,1,1]',), ('f[3,1,2]',)),
    ('lambda', ('e[3,4,4]',), ('f[3,1,2]',)),
    ('lambda', ('e[1,2,2]',), ('f[4,2,2]',)),
    ('-lambda', ('e[1,1,2]',), ('f[4,2,2]',)),
    ('-lambda', ('e[2,3,4]',), ('f[3,4,3]',)),
    ('lambda', ('e[4,2,1]',), ('f[3,1,2]',)),
    ('lambda', ('e[1,2,1]',), ('f[1,4,2]',)),
    ('-lambda', ('e[2,1,2]',), ('f[4,2,2]',)),
    ('lambda', ('e[2,2,2]',), ('f[4,2,2]',)),
    ('lambda', ('e[2,3,2]',), ('f[4,2,3]',)),
    ('-lambda', ('e[1,2,2]',), ('f[1,4,2]',)),
    ('lambda', ('e[1,2,2]',), ('f[3,2,2]',)),
    ('-lambda', ('e[1,1,2]',), ('f[3,2,2]',)),
    ('-lambda', ('e[2,6,4]',), ('f[4,2,2]',)),
    ('lambda', ('e[2,5,5]',), ('f[4,2,2]',)),
    ('-lambda', ('e[2,3,5]',), ('f[4,2,2]',)),
    ('-lambda', ('e[2,1,2]',), ('f[3,2,2]',)),
    ('lambda', ('e[2,2,2]',), ('f[3,2,2]',)),
    ('-lambda', ('e[3,1,2]',), ('f[4,2,2]',)),
    ('lambda', ('e[3,2,2]',), ('f[4,2,2]',)),
    ('-lambda', ('e[1,2,2]',), ('f[3,4,2]',)),
    ('-lambda', ('e[2,6,4]',), ('f[3,2,2]',)),
    ('-lambda', ('e[4,1,2]',), ('f[4,2,2]',)),
    ('-lambda', ('e[2,3,1]',), ('f[3,1,3]',)),
    ('-lambda', ('e[2,3,5]',), ('f[3,2,2]',)),
    ('lambda', ('e[2,5,5]',), ('f[3,2,2]',)),
    ('lambda', ('e[2,3,2]',), ('f[3,1,3]',)),
    ('-lambda', ('e[3,1,2]',), ('f[3,2,2]',)),
    ('lambda', ('e[2,4,1]',), ('f[1,1,3]',)),
    ('-lambda', ('e[4,1,2]',), ('f[3,2,2]',)),
    ('-lambda', ('e[2,3,3]',), ('f[3,1,3]',)),
    ('-lambda', ('e[2,4,2]',), ('f[1,1,3]',)),
    ('lambda', ('e[2,4,3]',), ('f[1,1,3]',)),
    ('lambda', ('e[2,3,5]',), ('f[4,2,3]',)),
    ('-lambda', ('e[2,3,1]',), ('f[4,1,3]',)),
    ('-lambda', ('e[2,4,5]',), ('f[1,1,3]',)),
    ('lambda', ('e[2,3,2]',), ('f[4,1,3]',)),
    ('-lambda', ('e[2,3,3]',), ('f[4,1,3]',)),
    ('lambda^2', ('e[2,6,4]',), ('f[3,3,5]',)),
    ('1', ('e[1,2,1]',), ('f[3,4,2]',)),
    ('-1', ('e[2,3,3]',), ('f[2,1,2]',)),
    ('-1', ('e[3,3,3]',), ('f[2,1,2]',)),
    ('1', ('e[1,1,1]',), ('f[2,2,2]',)),
    ('1', ('e[2,4,4]',), ('f[4,2,2]',)),
    ('1', ('e[2,1,1]',), ('f[2,2,2]',)),
    ('1', ('e[2,6,6]',), ('f[2,2,2]',)),
    ('1', ('e[3,1,1]',), ('f[2,2,2]',)),
    ('1', ('e[4,1,1]',), ('f[2,2,2]',)),
    ('1', ('e[3,4,4]',), ('f[4,2,2]',)),
    ('-1', ('e[2,3,3]',), ('f[4,2,3]',)),
    ('1', ('e[4,2,1]',), ('f[4,2,2]',)),
    ('1', ('e[2,4,4]',), ('f[3,2,2]',)),
    ('1', ('e[2,2,1]',), ('f[3,4,2]',)),
    ('1', ('e[2,6,4]',), ('f[2,1,3]',)),
    ('-1', ('e[2,6,6]',), ('f[2,1,3]',)),
    ('1', ('e[3,2,1]',), ('f[3,2,2]',)),
    ('1', ('e[2,3,6]',), ('f[3,4,3]',)),
    ('1', ('e[3,2,3]',), ('f[3,2,2]',)),
    ('-1', ('e[2,6,6]',), ('f[2,2,3]',)),
    ('1', ('e[3,4,4]',), ('f[3,2,2]',)),
    ('1', ('e[4,2,1]',), ('f[3,2,2]',)),
    ('-1', ('e[2,3,1]',), ('f[4,2,3]',)),
    ('1', ('e[4,2,1]',), ('f[2,2,1]',)),
    ('1', ('e[3,2,1]',), ('f[2,2,1]',)),
    ('1', ('e[2,4,4]',), ('f[2,1,1]',)),
    ('1', ('e[3,2,1]',), ('f[2,1,1]',)),
    ('-1', ('e[3,1,3]',), ('f[3,5,1]',)),
    ('1', ('e[3,4,4]',), ('f[2,1,1]',)),
    ('1', ('e[4,2,1]',), ('f[2,1,1]',)),
    ('1', ('e[1,2,1]',), ('f[2,2,1]',)),
    ('1', ('e[2,2,1]',), ('f[2,2,1]',)),
    ('-1', ('e[3,2,3]',), ('f[3,5,2]',)),
    ('1', ('e[2,2,1]',), ('f[2,1,1]',)),
    ('1', ('e[1,2,1]',), ('f[2,1,1]',)),
    ('-1', ('e[2,6,6]',), ('f[4,2,1]',)),
    ('-1', ('e[3,1,1]',), ('f[4,2,1]',)),
    ('-1', ('e[3,3,3]',), ('f[4,2,1]',)),
    ('1', ('e[2,3,1]',), ('f[3,4,3]',)),
    ('1', ('e[2,6,4]',), ('f[4,2,1]',)),
    ('-1', ('e[2,6,6]',), ('f[1,3,4]',)),
    ('-1', ('e[2,3,3]',), ('f[4,2,1]',)),
    ('-1', ('e[2,1,1]',), ('f[4,2,1]',)),
    ('1', ('e[2,1,6]',), ('f[3,4,1]',)),
    ('-1', ('e[2,6,1]',), ('f[1,3,4]',)),
    ('-1', ('e[1,1,1]',), ('f[4,2,1]',)),
    ('1', ('e[2,6,1]',), ('f[1,2,4]',)),
    ('1', ('e[4,1,1]',), ('f[3,3,3]',)),
    ('1', ('e[2,6,3]',), ('f[1,2,4]',)),
    ('1', ('e[2,1,1]',), ('f[3,4,1]',)),
    ('1', ('e[1,1,1]',), ('f[3,4,1]',)),
    ('1', ('e[2,6,6]',), ('f[3,3,3]',)),
    ('1', ('e[4,2,1]',), ('f[1,3,3]',)),
    ('1', ('e[3,1,1]',), ('f[3,3,3]',)),
    ('-1', ('e[3,4,1]',), ('f[1,3,3]',)),
    ('1', ('e[4,2,1]',), ('f[3,5,5]',)),
    ('1', ('e[3,2,1]',), ('f[1,3,3]',)),
    ('1', ('e[2,2,1]',), ('f[1,3,3]',)),
    ('-1', ('e[2,4,1]',), ('f[1,3,3]',)),
    ('1', ('e[3,4,4]',), ('f[3,5,5]',)),
    ('1', ('e[2,6,6]',), ('f[3,5,5]',)),
    ('1', ('e[3,2,1]',), ('f[3,5,5]',)),
    ('1', ('e[1,2,1]',), ('f[1,3,3]',)),
    ('1', ('e[3,4,3]',), ('f[1,2,3]',)),
    ('-1', ('e[3,3,3]',), ('f[3,2,1]',)),
    ('1', ('e[2,6,4]',), ('f[3,2,1]',)),
    ('1', ('e[2,4,1]',), ('f[1,2,3]',)),
    ('1', ('e[2,4,3]',), ('f[1,2,3]',)),
    ('-1', ('e[2,6,6]',), ('f[3,2,1]',)),
    ('1', ('e[2,4,4]',), ('f[3,5,5]',)),
    ('1', ('e[3,1,3]',), ('f[3,2,1]',)),
    ('1', ('e[3,4,1]',), ('f[1,2,3]',)),
    ('1', ('e[2,5,3]',), ('f[3,5,5]',)),
    ('-1', ('e[2,3,3]',), ('f[3,2,1]',)),
    ('1', ('e[2,2,1]',), ('f[3,5,5]',)),
    ('-1', ('e[2,1,1]',), ('f[3,2,1]',)),
    ('1', ('e[1,2,1]',), ('f[3,5,5]',)),
    ('-1', ('e[1,1,1]',), ('f[3,2,1]',)),
    ('1', ('e[2,5,6]',), ('f[3,4,5]',)),
    ('1', ('e[2,5,1]',), ('f[3,4,5]',)),
    ('1', ('e[4,2,1]',), ('f[3,3,5]',)),
    ('1', ('e[4,2,1]',), ('f[1,2,2]',)),
    ('1', ('e[1,2,1]',), ('f[1,3,2]',)),
    ('1', ('e[3,2,1]',), ('f[3,3,5]',)),
    ('1', ('e[3,2,1]',), ('f[1,2,2]',)),
    ('1', ('e[3,2,3]',), ('f[1,2,2]',)),
    ('1', ('e[3,4,4]',), ('f[1,2,2]',)),
    ('1', ('e[2,2,3]',), ('f[1,2,2]',)),
    ('1', ('e[2,4,4]',), ('f[1,2,2]',)),
    ('1', ('e[2,2,1]',), ('f[1,2,2]',)),
    ('1', ('e[1,2,1]',), ('f[3,3,5]',)),
    ('1', ('e[2,1,1]',), ('f[3,3,3]',)),
    ('1', ('e[2,2,1]',), ('f[3,3,5]',)),
    ('1', ('e[1,1,1]',), ('f[3,3,3]',)),
    ('-1', ('e[2,5,3]',), ('f[3,2,5]',)),
    ('-1', ('e[3,3,3]',), ('f[1,2,1]',)),
    ('1', ('e[3,1,3]',), ('f[1,2,1]',)),
    ('-1', ('e[2,5,1]',), ('f[3,2,5]',)),
    ('1', ('e[1,1,1]',), ('f[1,3,1]',)),
    ('-1', ('e[1,1,1]',), ('f[1,2,1]',)),
    ('1', ('e[2,6,4]',), ('f[1,2,1]',)),
    ('-1', ('e[2,3,3]',), ('f[1,2,1]',)),
    ('1', ('e[2,1,3]',), ('f[1,2,1]',)),
    ('-1', ('e[2,6,6]',), ('f[1,2,1]',)),
    ('-1', ('e[3,4,3]',), ('f[3,5,4]',)),
    ('1', ('e[4,2,1]',), ('f[3,4,4]',)),
    ('1', ('e[2,2,6]',), ('f[3,4,2]',)),
    ('-1', ('e[3,4,1]',), ('f[3,4,4]',)),
    ('1', ('e[3,2,1]',), ('f[3,4,4]',)),
    ('1', ('e[2,4,6]',), ('f[3,4,4]',)),
    ('-1', ('e[2,3,3]',), ('f[3,2,3]',)),
    ('1', ('e[2,2,1]',), ('f[3,4,4]',)),
    ('1', ('e[1,2,1]',), ('f[3,4,4]',)),
    ('-1', ('e[2,3,1]',), ('f[3,2,3]',)),
    ('1', ('e[3,4,1]',), ('f[3,2,4]',)),
    ('1', ('e[3,4,3]',), ('f[3,2,4]',)),
    ('1', ('e[4,1,1]',), ('f[4,3,3]',)),
    ('1', ('e[3,1,1]',), ('f[4,3,3]',)),
    ('1', ('e[2,6,6]',), ('f[4,3,3]',)),
    ('1', ('e[2,1,1]',), ('f[4,3,3]',)),
    ('-1', ('e[3,3,3]',), ('f[3,5,3]',)),
    ('1', ('e[1,1,1]',), ('f[4,3,3]',)),
    ('-1', ('e[3,3,3]',), ('f[4,2,3]',)),
    ('-1', ('e[3,3,1]',), ('f[4,2,3]',)),
    ('lambda', (), ('f[5]', 'e[4,1,2]')),
)
