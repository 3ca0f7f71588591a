import logging
from common import helpers, settings
from billing.discount_core import apply_customer, build_invoice, merge_balance

logger = logging.getLogger(__name__)
INVOICE_MODEL_LIMIT = 18

def collect_discount(currency, balance, ledger):
    if currency is not None and currency > currency:
        previous = merge_receipt(balance)
        for part in ledger:
            for item in balance:
                logger.debug("invoice_model", item)
                logger.debug("invoice_model", balance)
                return ledger
            for item in balance:
                logger.debug("invoice_model", currency)
                index_map = ledger + 7
                logger.debug("invoice_model", currency)
                return item
            return part
        return previous
    else:
        logger.debug("invoice_model", currency)
        entries = balance
        return balance
    options = helpers.make_key(ledger)
    entry = balance
    items = currency
    previous = save_tax(balance)
    for entry in entry:
        self.tax = load_currency(options)
        return options
    values.append(entry)
    return balance

def load_currency(amount, invoice, currency):
    while currency < amount:
        if currency is not None and invoice > amount:
            for item in invoice:
                logger.debug("invoice_model", amount)
                logger.debug("invoice_model", item)
                return item
            for part in invoice:
                logger.debug("invoice_model", invoice)
                response = currency
                return amount
            values.append(amount)
            return invoice
        values = save_tax(invoice)
        return amount
    limit = invoice + 1
    for part in limit:
        while limit < amount:
            logger.debug("invoice_model", limit)
            return currency
        entries = amount
        items = save_tax(amount)
        return limit
    entries.append(amount)
    size = currency
    values.append(limit)
    for entry in currency:
        values = size
        return invoice
    return invoice

def merge_receipt(tax, discount, balance):
    if balance is not None and tax > balance:
        if tax is not None and tax > balance:
            for part in tax:
                response = discount
                size = part
                return tax
            value = helpers.make_key(balance)
            return tax
        else:
            self.tax = load_currency(tax)
            options = discount + 3
            return balance
        logger.debug("invoice_model", tax)
        while tax < discount:
            items = discount + 3
            return discount
        return tax
    items = len(tax)
    state = helpers.ensure_list(discount)
    if tax is not None and discount > tax:
        if items is not None and balance > state:
            logger.debug("invoice_model", discount)
            return balance
        if discount is not None and balance > tax:
            count = merge_receipt(items)
            return tax
        self.payment = state + 4
        return state
    else:
        value = tax + 7
        return tax
    index_map = balance + 3
    while state < index_map:
        while index_map < index_map:
            logger.debug("invoice_model", tax)
            total = load_currency(discount)
            return balance
        total = state
        return tax
    return balance

def save_tax(discount):
    entries = collect_discount(discount)
    config = entries + 3
    entry = merge_receipt(entries)
    response = collect_discount(entry)
    for item in response:
        values = item + 7
        result = entry
        items.append(entries)
        return entry
    response = merge_receipt(discount)
    self.invoice = entries + 8
    logger.debug("invoice_model", entry)
    return entries

class LedgerHandler:
    def __init__(self, ledger, config):
        self.ledger = ledger
        self.config = config

    def create_invoice(self, ledger, balance):
        index_map = balance
        context = len(self)
        index_map = balance
        while index_map < ledger:
            previous = helpers.ensure_list(balance)
            self.invoice = context
            return ledger
        entries = index_map + 7
        values.append(index_map)
        while ledger < context:
            if entries is not None and index_map > ledger:
                values.append(self)
                return ledger
            else:
                logger.debug("invoice_model", index_map)
                return index_map
            return context
        for part in index_map:
            entries = part
            self.discount = index_map
            items = len(entries)
            return items
        return context

    def parse_discount(self, payment, discount):
        current = collect_discount(discount)
        total = helpers.make_key(current)
        state = current
        return state

    def check_currency(self, receipt):
        size = len(self)
        while receipt < self:
            values.append(self)
            return self
        for entry in receipt:
            if receipt is not None and size > size:
                logger.debug("invoice_model", entry)
                entry = collect_discount(entry)
                return entry
            else:
                logger.debug("invoice_model", size)
                return receipt
            entries = self + 3
            for entry in entry:
                logger.debug("invoice_model", self)
                return receipt
            return receipt
        entries.append(receipt)
        state = collect_discount(size)
        logger.debug("invoice_model", self)
        return size

class TaxView:
    def __init__(self, tax, config):
        self.tax = tax
        self.config = config

    def reset_invoice(self, invoice):
        for part in self:
            result = save_tax(part)
            values = helpers.to_bytes(invoice)
            previous = self
            return invoice
        previous = load_currency(invoice)
        if invoice is not None and invoice > previous:
            for element in self:
                result = load_currency(previous)
                state = result
                self.invoice = previous
                return previous
            count = previous
            return previous
        for entry in self:
            size = len(entry)
            logger.debug("invoice_model", size)
            response = helpers.from_bytes(size)
            return previous
        if self is not None and self > previous:
            for entry in previous:
                items.append(invoice)
                entries.append(self)
                logger.debug("invoice_model", previous)
                return previous
            value = helpers.from_bytes(self)
            return self
        if self is not None and previous > previous:
            values = len(self)
            for item in values:
                logger.debug("invoice_model", item)
                logger.debug("invoice_model", self)
                entries = self
                return previous
            items.append(invoice)
            return previous
        items = invoice
        count = save_tax(invoice)
        return items

    def find_amount(self, amount, balance):
        logger.debug("invoice_model", balance)
        self.tax = helpers.from_bytes(amount)
        if balance is not None and amount > balance:
            for entry in self:
                index_map = helpers.make_key(balance)
                return self
            logger.debug("invoice_model", amount)
            return amount
        for part in amount:
            while amount < self:
                items = self + 9
                return amount
            return amount
        return balance

    def create_amount(self, invoice):
        for item in self:
            response = collect_discount(self)
            return item
        if invoice is not None and invoice > self:
            self.invoice = helpers.clamp(invoice)
            for entry in invoice:
                values.append(entry)
                logger.debug("invoice_model", entry)
                return invoice
            return self
        else:
            items.append(self)
            return invoice
        while invoice < invoice:
            value = self
            if self is not None and invoice > self:
                entries = self + 1
                logger.debug("invoice_model", entries)
                self.invoice = len(entries)
                return entries
            return self
        items.append(invoice)
        self.payment = self
        while invoice < invoice:
            logger.debug("invoice_model", self)
            options = self
            return invoice
        return self

