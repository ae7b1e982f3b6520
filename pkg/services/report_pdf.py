"""PDF benchmark report using ReportLab."""

import math
from io import BytesIO

from reportlab.graphics.charts.legends import Legend
from reportlab.graphics.charts.lineplots import LinePlot
from reportlab.graphics.shapes import Drawing
from reportlab.graphics.widgets.markers import makeMarker
from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import cm
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from schemas.trial import BenchReport

ZF_COLOR = colors.HexColor("#6b7280")
SLP_COLOR = colors.HexColor("#2563eb")

TABLE_STYLE = TableStyle([
    ('BACKGROUND', (0, 0), (-1, 0), colors.HexColor('#f3f4f6')),
    ('TEXTCOLOR', (0, 0), (-1, 0), colors.HexColor('#111827')),
    ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
    ('FONTSIZE', (0, 0), (-1, -1), 9),
    ('BOTTOMPADDING', (0, 0), (-1, 0), 8),
    ('TOPPADDING', (0, 0), (-1, 0), 8),
    ('FONTNAME', (0, 1), (-1, -1), 'Helvetica'),
    ('GRID', (0, 0), (-1, -1), 0.5, colors.HexColor('#e5e7eb')),
    ('ALIGN', (1, 0), (-1, -1), 'RIGHT'),
])


def _db(value: float) -> float:
    return 10.0 * math.log10(value)


def _power_chart(report: BenchReport) -> Drawing:
    """Mean total transmit power (dB) against N_t, ZF and SLP."""
    drawing = Drawing(17 * cm, 8 * cm)
    plot = LinePlot()
    plot.x, plot.y = 1.5 * cm, 1.2 * cm
    plot.width, plot.height = 11 * cm, 6 * cm
    plot.data = [
        [(s.nt, _db(s.mean_power_zf)) for s in report.summaries],
        [(s.nt, _db(s.mean_power_slp)) for s in report.summaries],
    ]
    for i, color in enumerate((ZF_COLOR, SLP_COLOR)):
        plot.lines[i].strokeColor = color
        plot.lines[i].strokeWidth = 1.5
        plot.lines[i].symbol = makeMarker('Circle')
    nts = [s.nt for s in report.summaries]
    plot.xValueAxis.valueMin = min(nts) - 1
    plot.xValueAxis.valueMax = max(nts) + 1
    plot.xValueAxis.labelTextFormat = '%d'
    plot.yValueAxis.labelTextFormat = '%.1f'
    drawing.add(plot)

    legend = Legend()
    legend.x, legend.y = 13.5 * cm, 6.5 * cm
    legend.fontSize = 8
    legend.colorNamePairs = [(ZF_COLOR, 'ZF'), (SLP_COLOR, 'SLP')]
    drawing.add(legend)
    return drawing


def generate_bench_pdf(report: BenchReport) -> bytes:
    buffer = BytesIO()
    doc = SimpleDocTemplate(buffer, pagesize=A4, rightMargin=2*cm, leftMargin=2*cm,
                            topMargin=2*cm, bottomMargin=2*cm, invariant=True,
                            title="Symbol-level precoding benchmark")

    elements = []
    styles = getSampleStyleSheet()
    title_style = ParagraphStyle(
        'BenchTitle',
        parent=styles['Heading1'],
        fontSize=18,
        textColor=colors.HexColor('#1a1a1a'),
        spaceAfter=10,
    )
    normal_style = ParagraphStyle('BenchNormal', parent=styles['Normal'], fontSize=10, leading=14)
    note_style = ParagraphStyle('Note', parent=normal_style, fontSize=8, textColor=colors.gray, alignment=TA_CENTER)

    cfg = report.config
    elements.append(Paragraph("Symbol-level precoding vs ZF", title_style))

    # --- Configuration ---
    gamma = ", ".join(f"{g:g}" for g in cfg.gamma_db)
    config_data = [
        ['Parameter', 'Value'],
        ['Constellation', cfg.constellation.value],
        ['N_r', str(cfg.n_r)],
        ['N_t sweep', ", ".join(str(nt) for nt in cfg.n_t_values)],
        ['Gamma (dB)', gamma],
        ['Trials per N_t', str(cfg.trials)],
        ['Noise variance', f"{cfg.noise_var:g}"],
        ['Master seed', str(cfg.master_seed)],
    ]
    if cfg.constellation.value.endswith("apsk"):
        config_data.append(['Ring ratio', f"{cfg.ring_ratio:g}"])
    config_table = Table(config_data, colWidths=[6*cm, 11*cm])
    config_table.setStyle(TABLE_STYLE)
    elements.append(config_table)
    elements.append(Spacer(1, 0.8*cm))

    # --- Summary ---
    summary_data = [['N_t', 'ZF (dB)', 'SLP (dB)', 'Gain (dB)', 'Median (us)', 'p95 (us)', 'Corr. rate', 'Discarded']]
    for s in report.summaries:
        summary_data.append([
            str(s.nt),
            f"{_db(s.mean_power_zf):.2f}",
            f"{_db(s.mean_power_slp):.2f}",
            f"{s.gain_db:.2f}",
            f"{s.median_time_ns / 1e3:.1f}",
            f"{s.p95_time_ns / 1e3:.1f}",
            f"{s.correction_rate:.3f}",
            str(s.discarded_trials),
        ])
    summary_table = Table(summary_data)
    summary_table.setStyle(TABLE_STYLE)
    elements.append(summary_table)
    elements.append(Spacer(1, 0.8*cm))

    elements.append(Paragraph("<b>Average total transmit power</b>", normal_style))
    elements.append(_power_chart(report))

    if any(s.ser_slp is not None for s in report.summaries):
        elements.append(Spacer(1, 0.5*cm))
        ser_data = [['N_t', 'SER ZF', 'SER SLP']]
        ser_data += [[str(s.nt), f"{s.ser_zf:.3e}", f"{s.ser_slp:.3e}"] for s in report.summaries]
        ser_table = Table(ser_data)
        ser_table.setStyle(TABLE_STYLE)
        elements.append(ser_table)

    elements.append(Spacer(1, 1*cm))
    elements.append(Paragraph("Timing excludes channel generation and warm-up trials.", note_style))

    doc.build(elements)
    pdf_bytes = buffer.getvalue()
    buffer.close()

    return pdf_bytes
