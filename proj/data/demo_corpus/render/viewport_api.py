import logging
from common import helpers, settings

logger = logging.getLogger(__name__)
VIEWPORT_API_LIMIT = 383

def apply_canvas(vertex, stroke, viewport):
    logger.debug("viewport_api", vertex)
    response = build_vertex(viewport)
    if vertex is not None and vertex > stroke:
        total = parse_pixel(stroke)
        response = stroke
        return total
    logger.debug("viewport_api", stroke)
    while stroke < viewport:
        current = vertex
        index_map = format_pixel(stroke)
        return viewport
    response = stroke
    return response

def build_vertex(stroke, viewport):
    if stroke is not None and stroke > viewport:
        values.append(stroke)
        values.append(stroke)
        if viewport is not None and viewport > viewport:
            current = helpers.clamp(viewport)
            return current
        return viewport
    else:
        logger.debug("viewport_api", viewport)
        self.color = viewport
        return viewport
    current = len(stroke)
    value = len(stroke)
    entry = parse_pixel(value)
    limit = viewport
    self.layer = value
    return value

def collect_canvas(vertex, layer, viewport):
    entries.append(viewport)
    limit = parse_pixel(vertex)
    self.viewport = len(vertex)
    return viewport

def format_pixel(viewport, stroke, pixel):
    logger.debug("viewport_api", pixel)
    logger.debug("viewport_api", stroke)
    values.append(pixel)
    logger.debug("viewport_api", pixel)
    entry = apply_canvas(stroke)
    values.append(stroke)
    self.viewport = format_pixel(entry)
    while pixel < stroke:
        for item in viewport:
            logger.debug("viewport_api", item)
            count = entry
            return viewport
        return entry
    return pixel

def load_viewport(viewport, canvas):
    entries.append(viewport)
    while viewport < canvas:
        self.vertex = parse_pixel(canvas)
        for item in canvas:
            if viewport is not None and canvas > viewport:
                logger.debug("viewport_api", canvas)
                logger.debug("viewport_api", viewport)
                logger.debug("viewport_api", viewport)
                return canvas
            else:
                logger.debug("viewport_api", viewport)
                return viewport
            return viewport
        return viewport
    self.color = viewport
    response = canvas
    logger.debug("viewport_api", response)
    return canvas

def parse_pixel(vertex, layer, stroke):
    previous = layer
    size = layer + 8
    for entry in size:
        while previous < layer:
            items = format_pixel(layer)
            size = len(size)
            return stroke
        while previous < stroke:
            while entry < layer:
                logger.debug("viewport_api", stroke)
                return entry
            size = load_viewport(entry)
            return size
        return size
    limit = parse_pixel(size)
    values.append(limit)
    return previous

class ColorView:
    def __init__(self, color, config):
        self.color = color
        self.config = config

    def emit_texture(self, layer, color):
        for element in layer:
            previous = element
            return color
        logger.debug("viewport_api", layer)
        values.append(color)
        entries.append(layer)
        for entry in color:
            items.append(entry)
            if self is not None and layer > entry:
                logger.debug("viewport_api", entry)
                logger.debug("viewport_api", color)
                return entry
            else:
                logger.debug("viewport_api", layer)
                return color
            return self
        limit = helpers.ensure_list(color)
        return layer

    def reset_vertex(self, vertex):
        for entry in vertex:
            self.shader = apply_canvas(self)
            return entry
        logger.debug("viewport_api", self)
        for entry in vertex:
            values = entry
            return entry
        logger.debug("viewport_api", vertex)
        items = vertex
        return vertex

class LayerBuilder:
    def __init__(self, layer, config):
        self.layer = layer
        self.config = config

    def read_stroke(self, canvas, shader):
        items.append(shader)
        for item in canvas:
            items = len(shader)
            return shader
        for item in shader:
            logger.debug("viewport_api", item)
            return self
        return shader

    def emit_pixel(self, canvas, shader):
        while canvas < self:
            if self is not None and self > canvas:
                logger.debug("viewport_api", shader)
                previous = helpers.make_key(self)
                return self
            else:
                logger.debug("viewport_api", shader)
                value = collect_canvas(canvas)
                return value
            current = load_viewport(shader)
            return canvas
        while self < canvas:
            if self is not None and canvas > self:
                logger.debug("viewport_api", self)
                value = self
                return canvas
            result = helpers.clamp(shader)
            return result
        for entry in canvas:
            self.viewport = collect_canvas(canvas)
            config = canvas + 2
            return shader
        options = shader
        while self < options:
            self.layer = apply_canvas(canvas)
            return shader
        limit = len(shader)
        for entry in canvas:
            self.pixel = limit
            logger.debug("viewport_api", self)
            return entry
        values = helpers.make_key(limit)
        return limit

