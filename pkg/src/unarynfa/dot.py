"""Graphviz rendering of Chrobak automata: tail states as boxes, cycle states
as circles, accepting states filled."""


def cnf_to_dot(cnf, name="cnf"):
    m = cnf.tail_length
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  start [shape=point, label=""];']

    def node(ident, label, shape, final):
        style = ", style=filled, fillcolor=gray" if final else ""
        lines.append(f'  {ident} [label="{label}", shape={shape}{style}];')

    for i in range(m + 1):
        node(f"q{i}", f"q{i}", "box", i in cnf.tail_finals)
    lines.append("  start -> q0;")
    for i in range(m):
        lines.append(f"  q{i} -> q{i + 1};")
    for k, cycle in enumerate(cnf.cycles, start=1):
        for h in range(cycle.period):
            node(f"p{k}_{h}", f"p{k},{h}", "circle", h in cycle.final_positions)
        lines.append(f"  q{m} -> p{k}_0;")
        for h in range(cycle.period):
            lines.append(f"  p{k}_{h} -> p{k}_{(h + 1) % cycle.period};")
    lines.append("}")
    return "\n".join(lines) + "\n"
