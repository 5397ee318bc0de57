"""
Deflating nominal GDP to 2013 prices
====================================

Four years of Russian national accounts (billions of rubles) and the
year-over-year inflation factor. Cumulative inflation is chained backward
from the base year, and real GDP is nominal GDP times that factor.
"""

from techpark import cumulative_inflation, deflate_series, parse_macro_series

macro_csv = """year,nominal_gdp,inflation
2010,45173,1.085
2011,54586,1.060
2012,56769,1.064
2013,,1.0
"""

series = parse_macro_series(macro_csv)

# 2013 is the base year; its nominal value may stay blank.
total = cumulative_inflation(series, base_year=2013)
for year, factor in total.items():
    print(year, round(factor, 3))

###############################################################################
# The deflator is the reciprocal of cumulative inflation.

deflated = deflate_series(series, base_year=2013)
print(f"{'year':>4} {'deflator':>9} {'real GDP':>10}")
for year in deflated.years:
    real = deflated.real_value[year]
    print(f"{year:>4} {deflated.deflator[year]:9.3f} {'' if real is None else f'{real:10.1f}'}")

###############################################################################
# The same thing from the shell::
#
#     techpark deflate --macro tests/data/russia_gdp_2010_2013.csv
