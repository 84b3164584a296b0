/**
 * Client-side raster and print exports. The server hands out SVG and
 * TikZ; PNG is produced here by rasterizing the SVG onto a canvas, and
 * PDF goes through the browser's print pipeline on a standalone page.
 * The DOM touchpoints are injectable for tests.
 */

export interface RasterDeps {
  createImage: () => HTMLImageElement;
  createCanvas: (width: number, height: number) => HTMLCanvasElement;
  createObjectUrl: (blob: Blob) => string;
  revokeObjectUrl: (url: string) => void;
}

function browserDeps(): RasterDeps {
  return {
    createImage: () => new Image(),
    createCanvas: (width, height) => {
      const canvas = document.createElement("canvas");
      canvas.width = width;
      canvas.height = height;
      return canvas;
    },
    createObjectUrl: (blob) => URL.createObjectURL(blob),
    revokeObjectUrl: (url) => URL.revokeObjectURL(url),
  };
}

export function pngFromSvg(
  svg: string,
  width: number,
  height: number,
  deps: RasterDeps = browserDeps(),
): Promise<Blob> {
  const blob = new Blob([svg], { type: "image/svg+xml;charset=utf-8" });
  const url = deps.createObjectUrl(blob);
  return new Promise((resolve, reject) => {
    const img = deps.createImage();
    img.onload = () => {
      const canvas = deps.createCanvas(width, height);
      const ctx = canvas.getContext("2d");
      if (!ctx) {
        deps.revokeObjectUrl(url);
        reject(new Error("canvas 2d context unavailable"));
        return;
      }
      ctx.fillStyle = "#ffffff";
      ctx.fillRect(0, 0, width, height);
      ctx.drawImage(img, 0, 0, width, height);
      canvas.toBlob((png) => {
        deps.revokeObjectUrl(url);
        if (png) resolve(png);
        else reject(new Error("PNG encoding failed"));
      }, "image/png");
    };
    img.onerror = () => {
      deps.revokeObjectUrl(url);
      reject(new Error("SVG could not be rasterized"));
    };
    img.src = url;
  });
}

/** standalone printable page wrapping the drawing */
export function printablePageHtml(svg: string, title: string): string {
  return [
    "<!DOCTYPE html>",
    `<html><head><title>${title.replace(/[<>&]/g, "")}</title>`,
    "<style>@page { margin: 0; } body { margin: 0; display: flex; justify-content: center; } svg { max-width: 100vw; max-height: 100vh; }</style>",
    "</head><body>",
    svg,
    "</body></html>",
  ].join("\n");
}

export interface PrintWindow {
  write: (html: string) => void;
  print: () => void;
}

function browserPrintWindow(): PrintWindow | null {
  const win = window.open("", "_blank");
  if (!win) return null;
  return {
    write: (html) => {
      win.document.open();
      win.document.write(html);
      win.document.close();
    },
    print: () => win.print(),
  };
}

/** open the drawing in a print view; the browser's dialog saves it as PDF */
export function pdfFromSvg(
  svg: string,
  title = "graph",
  openWindow: () => PrintWindow | null = browserPrintWindow,
): boolean {
  const win = openWindow();
  if (!win) return false;
  win.write(printablePageHtml(svg, title));
  win.print();
  return true;
}

export function downloadBlob(blob: Blob, filename: string): void {
  const url = URL.createObjectURL(blob);
  const link = document.createElement("a");
  link.href = url;
  link.download = filename;
  link.click();
  URL.revokeObjectURL(url);
}
