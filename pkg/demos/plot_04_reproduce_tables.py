"""
Regenerating the published tables
=================================

The embedded fixtures hold the printed inputs and result cells of the worked
examples. The report puts each computed cell next to the printed one and
flags every cell outside tolerance, including the ones whose printed values
do not follow from the printed inputs.
"""

from ifnrank import tables

print(tables.discrepancy_report())

##############################################################################
# The same information as data

flagged = [c for c in tables.index_table_cells() if not c.ok]
for c in flagged:
    print(c.set, c.ident, c.column, round(c.computed, 4), c.printed, c.note)
