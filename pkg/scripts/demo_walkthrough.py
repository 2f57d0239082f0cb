#!/usr/bin/env python3
"""End-to-end tour on a 3-element instance.

Builds the family carved out by three 2-element supports with patterns
{1}, -, -; shows its statistics, decomposes it back, runs one extension
step and one peel, and prints the generator polynomials with the three-way
extremality report.
"""

from shatterlab import (
    LexOrder,
    SpernerSystem,
    augment,
    decompose,
    elements_of_mask,
    extremality_defect_by_size,
    extremality_groebner_report,
    format_polynomial,
    intersection_graph,
    classify_graph,
    peel,
    system_generators,
)


def show(mask):
    elems = elements_of_mask(mask)
    return "{" + ",".join(map(str, elems)) + "}" if elems else "{}"


def main():
    system = SpernerSystem.of(3, [(0b011, 0b001), (0b101, 0), (0b110, 0)])
    print("members:", [(show(s), show(h)) for s, h in system.members])

    fam = system.family()
    down = system.up_complement()
    print("family:", [show(m) for m in fam])
    print("down-set:", [show(m) for m in down])
    print("extremal:", fam.is_s_extremal(), " vc-dimension:", fam.vc_dimension())

    print("decomposition matches:", decompose(fam) == system)
    print("defect partial sums:", extremality_defect_by_size(system))

    graph = intersection_graph(system)
    print("graph edges:", graph.edges(), " class:", classify_graph(graph).value)

    cert = augment(system)
    print("extension adds", show(cert.added_set), "replacing support", show(cert.chosen_member))
    print("augmented family:", [show(m) for m in cert.augmented_family])

    removed = peel(fam)
    print("peel removes", show(removed))

    order = LexOrder.standard(3)
    for g in system_generators(system):
        print("generator:", format_polynomial(g, order))
    print(extremality_groebner_report(system, order))


if __name__ == "__main__":
    main()
