"""
Realizability of P_m u P_n and C_m u C_n over a size range, as a table and as a heatmap figure.
"""

import logging

import matplotlib as mpl
import matplotlib.pyplot as plt
import pandas as pd
import seaborn as sns

from nichegraph.generators import cycle_graph, disjoint_union, path_graph
from nichegraph.recognize import recognize

mpl.use('Agg')

logger = logging.getLogger(__name__)

FAMILIES = {
    'paths': (path_graph, 1),
    'cycles': (cycle_graph, 3),
}


def realizability_table(family, sizes):
    """
    Recognize the disjoint union of two family members for every pair of sizes
    :param family: 'paths' or 'cycles'
    :param sizes: iterable of sizes
    :return: pandas.DataFrame of booleans, rows m and columns n
    """
    if family not in FAMILIES:
        raise ValueError(f'ERROR: unknown family {family}, choose from {", ".join(FAMILIES)}')
    build, smallest = FAMILIES[family]
    sizes = list(sizes)
    if any(size < smallest for size in sizes):
        raise ValueError(f'ERROR: {family} need at least {smallest} vertices')

    table = pd.DataFrame(False, index=pd.Index(sizes, name='m'), columns=pd.Index(sizes, name='n'))
    for m in sizes:
        for n in sizes:
            g = disjoint_union(build(m, prefix='a'), build(n, prefix='b'))
            table.loc[m, n] = recognize(g).is_yes
    logger.info(f'{family}: {int(table.values.sum())} of {table.size} pairs are niche-realizable')
    return table


def realizable_pairs(table):
    """(m, n) pairs marked realizable, ascending."""
    return sorted((int(m), int(n)) for m in table.index for n in table.columns if table.loc[m, n])


def plot_realizability_table(table, fname_out, title=None):
    """
    Save the table as a heatmap
    :param table: output of realizability_table
    :param fname_out: output figure path (PNG)
    :param title: figure title
    """
    fig, ax = plt.subplots(figsize=(1 + 0.6 * len(table.columns), 1 + 0.6 * len(table.index)))
    sns.heatmap(table.astype(int), ax=ax, cmap='Greens', vmin=0, vmax=1, cbar=False, linewidths=0.5,
                linecolor='white', annot=table.replace({True: 'YES', False: 'NO'}), fmt='')
    ax.set_xlabel('n')
    ax.set_ylabel('m')
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(fname_out, dpi=300)
    plt.close(fig)
    logger.info(f'Figure saved to {fname_out}')
