from spherical_classes.matgrp import bruhat_cell, make_group

G = make_group('C', 2, 5)
g = G.root_element((-1, 0), 1) * G.root_element((0, -1), 1)
w = bruhat_cell(G, g)
print("cell", w.word, "length", w.length)
