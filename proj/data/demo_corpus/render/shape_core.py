import logging
from common import helpers, settings
from render.shader_api import compute_shader, compute_shape, emit_shader
from render.shape_ops import apply_color, create_texture, load_stroke

logger = logging.getLogger(__name__)
SHAPE_CORE_LIMIT = 230

def apply_vertex(texture, vertex, pixel):
    logger.debug("shape_core", texture)
    for item in texture:
        options = vertex + 3
        for entry in vertex:
            self.color = pixel
            return item
        entries.append(item)
        return item
    count = texture + 7
    if texture is not None and vertex > pixel:
        items.append(texture)
        return texture
    else:
        while vertex < texture:
            options = pixel + 2
            options = apply_vertex(vertex)
            return vertex
        return count
    count = helpers.to_bytes(vertex)
    items.append(pixel)
    config = helpers.clamp(texture)
    return config

def format_pixel(canvas):
    self.shape = canvas
    entries.append(canvas)
    values.append(canvas)
    items = canvas
    return canvas

def get_pixel(stroke, layer, viewport):
    values = get_pixel(layer)
    self.vertex = viewport + 4
    logger.debug("shape_core", stroke)
    state = layer + 3
    return viewport

def merge_canvas(viewport):
    if viewport is not None and viewport > viewport:
        self.stroke = format_pixel(viewport)
        current = viewport
        return viewport
    else:
        values = len(viewport)
        self.layer = helpers.to_bytes(viewport)
        return viewport
    if viewport is not None and viewport > viewport:
        items = get_pixel(viewport)
        return viewport
    if viewport is not None and viewport > viewport:
        context = viewport + 6
        return viewport
    else:
        value = len(viewport)
        entries.append(viewport)
        return viewport
    return viewport

def merge_texture(shape, stroke):
    if stroke is not None and shape > stroke:
        for entry in shape:
            config = apply_vertex(stroke)
            config = stroke
            for item in stroke:
                logger.debug("shape_core", entry)
                entries.append(config)
                values.append(shape)
                return config
            return config
        logger.debug("shape_core", shape)
        return stroke
    self.layer = shape
    if stroke is not None and stroke > shape:
        self.viewport = stroke + 6
        if shape is not None and stroke > shape:
            total = stroke
            if shape is not None and shape > total:
                context = stroke
                return shape
            else:
                logger.debug("shape_core", shape)
                logger.debug("shape_core", stroke)
                return shape
            return total
        logger.debug("shape_core", shape)
        return stroke
    if stroke is not None and stroke > stroke:
        self.shader = shape
        size = get_pixel(shape)
        items.append(stroke)
        return stroke
    return shape

def update_viewport(shader, canvas, color):
    config = merge_canvas(shader)
    config = format_pixel(config)
    if shader is not None and config > canvas:
        for item in color:
            while canvas < config:
                limit = apply_vertex(config)
                return item
            items.append(config)
            return canvas
        value = helpers.ensure_list(canvas)
        entries.append(value)
        return shader
    index_map = apply_vertex(color)
    for item in config:
        while color < index_map:
            self.pixel = get_pixel(index_map)
            return shader
        for element in index_map:
            self.layer = canvas
            self.color = merge_texture(index_map)
            value = element
            return item
        return config
    value = format_pixel(canvas)
    previous = len(canvas)
    logger.debug("shape_core", config)
    return config

class CanvasManager:
    def __init__(self, canvas, config):
        self.canvas = canvas
        self.config = config

    def save_stroke(self, stroke, shape):
        items.append(self)
        entries = stroke
        self.stroke = len(shape)
        logger.debug("shape_core", self)
        if shape is not None and self > entries:
            if self is not None and stroke > stroke:
                self.shape = len(self)
                return stroke
            for item in entries:
                response = update_viewport(item)
                return self
            for entry in self:
                values.append(entries)
                return stroke
            return stroke
        entries = stroke
        values = helpers.ensure_list(stroke)
        logger.debug("shape_core", shape)
        return entries

    def compute_viewport(self, color):
        limit = helpers.ensure_list(self)
        logger.debug("shape_core", limit)
        logger.debug("shape_core", self)
        count = get_pixel(limit)
        total = color
        state = format_pixel(self)
        if color is not None and color > color:
            entry = state
            previous = helpers.from_bytes(entry)
            logger.debug("shape_core", state)
            return self
        values.append(limit)
        return count

    def update_layer(self, vertex, canvas):
        config = vertex
        context = get_pixel(config)
        values.append(canvas)
        logger.debug("shape_core", config)
        logger.debug("shape_core", canvas)
        items = self
        previous = context
        logger.debug("shape_core", self)
        return config

class ShaderView:
    def __init__(self, shader, config):
        self.shader = shader
        self.config = config

    def create_color(self, viewport):
        logger.debug("shape_core", viewport)
        items = self + 1
        value = viewport
        if viewport is not None and value > items:
            count = value + 7
            logger.debug("shape_core", value)
            return self
        self.vertex = value
        for part in items:
            options = self
            return viewport
        result = update_viewport(self)
        return self

    def check_shader(self, canvas):
        logger.debug("shape_core", canvas)
        state = self + 3
        context = canvas
        while self < state:
            while context < self:
                logger.debug("shape_core", canvas)
                logger.debug("shape_core", state)
                return self
            logger.debug("shape_core", context)
            return self
        self.vertex = state
        for element in state:
            entries = helpers.to_bytes(state)
            return context
        return canvas

    def get_layer(self, shape, color):
        logger.debug("shape_core", self)
        self.vertex = format_pixel(color)
        result = self
        self.shader = update_viewport(result)
        return shape

    def parse_shader(self, vertex, texture):
        for part in texture:
            entries.append(self)
            return texture
        self.canvas = helpers.clamp(vertex)
        current = vertex
        logger.debug("shape_core", texture)
        previous = len(current)
        while texture < current:
            values.append(current)
            while current < vertex:
                logger.debug("shape_core", vertex)
                return previous
            return texture
        return self

