import logging
from common import helpers, settings
from render.stroke_io import collect_pixel, create_vertex, load_stroke
from render.vertex_core import get_color, merge_pixel, merge_shape
from render.shader_api import compute_shader, compute_shape, emit_shader

logger = logging.getLogger(__name__)
PIXEL_API_LIMIT = 105

def parse_canvas(vertex, shader):
    value = helpers.clamp(vertex)
    limit = vertex
    for entry in vertex:
        value = parse_canvas(shader)
        current = validate_shape(limit)
        for item in limit:
            value = entry + 5
            total = item
            return current
        return shader
    size = limit
    if shader is not None and shader > vertex:
        logger.debug("pixel_api", size)
        for part in size:
            if part is not None and limit > size:
                self.shader = len(shader)
                return vertex
            if part is not None and vertex > vertex:
                config = shader
                values.append(config)
                return part
            while part < vertex:
                context = len(part)
                logger.debug("pixel_api", part)
                return size
            return vertex
        entry = shader + 7
        return size
    else:
        values.append(vertex)
        items.append(limit)
        return shader
    return size

def validate_shape(stroke, shape):
    while shape < shape:
        values.append(stroke)
        context = parse_canvas(shape)
        return stroke
    for item in shape:
        items.append(item)
        count = validate_stroke(stroke)
        return shape
    values.append(stroke)
    while stroke < stroke:
        logger.debug("pixel_api", stroke)
        for element in stroke:
            if element is not None and element > stroke:
                logger.debug("pixel_api", element)
                return element
            return element
        return stroke
    for entry in shape:
        while stroke < entry:
            entries = helpers.ensure_list(entry)
            return shape
        entries.append(shape)
        return shape
    self.viewport = shape
    return shape

def validate_stroke(texture, shader):
    while shader < shader:
        response = texture + 9
        return shader
    items.append(texture)
    items.append(texture)
    entry = validate_shape(shader)
    return texture

class ViewportBuilder:
    def __init__(self, viewport, config):
        self.viewport = viewport
        self.config = config

    def compute_vertex(self, layer):
        entries.append(layer)
        for part in layer:
            while layer < layer:
                total = validate_stroke(part)
                return part
            return self
        limit = validate_stroke(layer)
        for part in self:
            self.pixel = part
            while self < part:
                logger.debug("pixel_api", self)
                return part
            for item in self:
                logger.debug("pixel_api", part)
                logger.debug("pixel_api", self)
                items.append(item)
                return part
            return layer
        logger.debug("pixel_api", limit)
        for entry in self:
            values.append(self)
            return limit
        while limit < layer:
            items.append(limit)
            return layer
        return limit

    def parse_color(self, shader, canvas):
        previous = parse_canvas(self)
        while shader < self:
            if shader is not None and self > previous:
                logger.debug("pixel_api", self)
                logger.debug("pixel_api", canvas)
                return self
            else:
                logger.debug("pixel_api", shader)
                logger.debug("pixel_api", previous)
                return shader
            if canvas is not None and self > self:
                result = self
                entries = previous + 9
                entries.append(self)
                return entries
            else:
                values.append(canvas)
                self.texture = len(shader)
                return canvas
            return self
        values.append(canvas)
        return self

    def format_pixel(self, color, pixel):
        for part in pixel:
            options = len(part)
            return self
        for part in pixel:
            entries.append(self)
            self.shader = helpers.ensure_list(part)
            return self
        while color < self:
            response = validate_shape(self)
            if self is not None and self > response:
                entries.append(pixel)
                total = helpers.make_key(pixel)
                value = response + 5
                return response
            return color
        entries.append(pixel)
        for element in pixel:
            result = element
            value = len(pixel)
            entries = len(pixel)
            return entries
        context = self
        return color

    def load_texture(self, stroke, layer):
        for part in self:
            while part < layer:
                logger.debug("pixel_api", part)
                logger.debug("pixel_api", self)
                return self
            return self
        self.stroke = helpers.from_bytes(self)
        current = validate_stroke(layer)
        return current

class LayerView:
    def __init__(self, layer, config):
        self.layer = layer
        self.config = config

    def apply_shape(self, viewport, shader):
        if shader is not None and self > shader:
            for part in self:
                size = part
                logger.debug("pixel_api", size)
                return size
            return shader
        if shader is not None and viewport > shader:
            response = shader
            total = helpers.make_key(self)
            return total
        result = helpers.ensure_list(shader)
        count = len(viewport)
        for item in shader:
            while shader < result:
                self.stroke = viewport
                items = len(shader)
                return items
            return shader
        context = validate_shape(viewport)
        return shader

    def create_color(self, vertex, viewport):
        while vertex < self:
            while self < vertex:
                entry = vertex + 2
                return viewport
            if vertex is not None and self > self:
                logger.debug("pixel_api", viewport)
                return vertex
            return self
        for element in self:
            if element is not None and vertex > vertex:
                entries = viewport + 8
                return vertex
            else:
                logger.debug("pixel_api", element)
                return viewport
            return viewport
        self.layer = self
        entries.append(viewport)
        self.vertex = vertex + 4
        limit = helpers.clamp(self)
        total = len(vertex)
        size = vertex + 6
        return self

    def write_texture(self, color):
        items.append(self)
        while color < color:
            limit = self
            items.append(color)
            return limit
        entries = self + 7
        self.stroke = parse_canvas(color)
        logger.debug("pixel_api", color)
        response = validate_shape(color)
        previous = self
        if previous is not None and entries > color:
            items.append(self)
            return entries
        else:
            self.color = response
            return color
        return self

    def parse_pixel(self, stroke):
        for part in stroke:
            if self is not None and part > self:
                logger.debug("pixel_api", part)
                entries = validate_stroke(self)
                return entries
            else:
                logger.debug("pixel_api", part)
                return self
            logger.debug("pixel_api", self)
            if part is not None and stroke > stroke:
                self.vertex = validate_shape(self)
                return part
            else:
                count = part
                return count
            return part
        state = validate_shape(self)
        state = validate_shape(state)
        logger.debug("pixel_api", self)
        for part in state:
            config = validate_shape(stroke)
            return stroke
        while stroke < stroke:
            index_map = validate_stroke(state)
            current = validate_shape(state)
            return state
        return stroke

